#include "hopfforge/io.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace hopfforge {

namespace {

std::string trim(const std::string& s)
{
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

[[noreturn]] void bad_line(size_t line, const std::string& what)
{
    throw Error(ErrorKind::malformed_input, "line " + std::to_string(line) + ": " + what);
}

std::vector<Label> parse_labels(const std::string& text, size_t line)
{
    std::istringstream in(text);
    std::vector<Label> out;
    std::string tok;
    while (in >> tok) {
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            bad_line(line, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) bad_line(line, "expected an integer, got '" + tok + "'");
        if (v < 0 || v > 1000000000) bad_line(line, "label out of range: " + tok);
        out.push_back(static_cast<Label>(v));
    }
    return out;
}

// key=value fields of a header line after its leading keyword
std::map<std::string, std::string> header_fields(const std::string& rest, size_t line)
{
    std::map<std::string, std::string> out;
    std::istringstream in(rest);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos || eq == 0) bad_line(line, "malformed header field '" + tok + "'");
        out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

long long header_int(const std::map<std::string, std::string>& f, const std::string& key, size_t line)
{
    auto it = f.find(key);
    if (it == f.end()) bad_line(line, "header lacks " + key + "=");
    auto v = parse_labels(it->second, line);
    if (v.size() != 1) bad_line(line, "bad value for " + key);
    return v[0];
}

Simplex checked_simplex(std::vector<Label> v, size_t line)
{
    try {
        return make_simplex(std::move(v));
    } catch (const Error& e) {
        bad_line(line, e.what());
    }
}

} // namespace

Complex read_scx(std::istream& in)
{
    std::string raw;
    size_t line = 0;
    bool have_header = false;
    long long dim = -1, n = -1;
    size_t header_line = 0;
    std::vector<Simplex> facets;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            if (s.rfind("scx", 0) != 0) bad_line(line, "expected header 'scx dim=<d> n=<vertices>'");
            auto f = header_fields(s.substr(3), line);
            dim = header_int(f, "dim", line);
            n = header_int(f, "n", line);
            have_header = true;
            header_line = line;
            continue;
        }
        auto labels = parse_labels(s, line);
        if (labels.empty()) continue;
        facets.push_back(checked_simplex(std::move(labels), line));
    }
    if (!have_header) throw Error(ErrorKind::malformed_input, "missing scx header");
    Complex c = Complex::from_facets(std::move(facets));
    if (c.dim() != dim)
        bad_line(header_line, "header dim=" + std::to_string(dim) + " but facets have dimension " + std::to_string(c.dim()));
    if (static_cast<long long>(c.num_vertices()) != n)
        bad_line(header_line, "header n=" + std::to_string(n) + " but facets use " + std::to_string(c.num_vertices()) +
                                  " vertices");
    return c;
}

Complex read_scx_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::malformed_input, "cannot open " + path);
    return read_scx(in);
}

void write_scx(std::ostream& out, const Complex& c, const std::vector<std::string>& comments)
{
    for (const auto& line : comments) out << "# " << line << '\n';
    out << "scx dim=" << c.dim() << " n=" << c.num_vertices() << '\n';
    for (const auto& f : c.facets()) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << '\n';
    }
}

std::string to_scx(const Complex& c)
{
    std::ostringstream out;
    write_scx(out, c);
    return out.str();
}

nlohmann::json complex_to_json(const Complex& c)
{
    nlohmann::json j;
    j["dim"] = c.dim();
    j["n"] = c.num_vertices();
    j["facets"] = c.facets();
    return j;
}

Complex complex_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw Error(ErrorKind::malformed_input, "JSON complex needs a 'facets' array");
    std::vector<Simplex> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw Error(ErrorKind::malformed_input, "facet is not an array");
        std::vector<Label> v;
        for (const auto& x : f) {
            if (!x.is_number_integer()) throw Error(ErrorKind::malformed_input, "facet entry is not an integer");
            v.push_back(x.get<Label>());
        }
        facets.push_back(make_simplex(std::move(v)));
    }
    Complex c = Complex::from_facets(std::move(facets));
    if (j.contains("dim") && j["dim"].get<int>() != c.dim())
        throw Error(ErrorKind::malformed_input, "JSON dim does not match facets");
    if (j.contains("n") && j["n"].get<size_t>() != c.num_vertices())
        throw Error(ErrorKind::malformed_input, "JSON n does not match facets");
    return c;
}

Complex read_complex(std::istream& in)
{
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t first = all.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && all[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(all);
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(ErrorKind::malformed_input, e.what());
        }
        return complex_from_json(j);
    }
    std::istringstream s(all);
    return read_scx(s);
}

Complex read_complex_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::malformed_input, "cannot open " + path);
    return read_complex(in);
}

GroupAction OrbitFile::action() const
{
    if (group == "cyclic") return GroupAction::cyclic(n);
    return GroupAction(perms);
}

Complex OrbitFile::expand() const { return expand_orbits(generators, action()); }

std::vector<std::vector<Simplex>> OrbitFile::orbits() const
{
    GroupAction g = action();
    std::vector<std::vector<Simplex>> out;
    for (const auto& s : generators) out.push_back(g.orbit(s));
    return out;
}

OrbitFile read_orbits(std::istream& in)
{
    OrbitFile o;
    std::string raw;
    size_t line = 0;
    bool have_header = false;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        if (!have_header) {
            if (s.rfind("orbits", 0) != 0) bad_line(line, "expected header 'orbits n=<modulus> group=<cyclic|perms>'");
            auto f = header_fields(s.substr(6), line);
            o.n = static_cast<Label>(header_int(f, "n", line));
            if (o.n < 1) bad_line(line, "n must be positive");
            o.group = f.count("group") ? f["group"] : "cyclic";
            if (o.group != "cyclic" && o.group != "perms") bad_line(line, "unknown group '" + o.group + "'");
            have_header = true;
            continue;
        }
        if (s.rfind("perm:", 0) == 0) {
            if (o.group != "perms") bad_line(line, "perm line in a cyclic orbit file");
            try {
                o.perms.push_back(Permutation::from_cycles(s.substr(5), static_cast<size_t>(o.n)));
            } catch (const Error& e) {
                bad_line(line, e.what());
            }
            if (o.perms.back().size() > static_cast<size_t>(o.n)) bad_line(line, "permutation moves labels beyond n");
            continue;
        }
        auto labels = parse_labels(s, line);
        for (Label v : labels)
            if (v >= o.n) bad_line(line, "label " + std::to_string(v) + " not below n=" + std::to_string(o.n));
        o.generators.push_back(checked_simplex(std::move(labels), line));
    }
    if (!have_header) throw Error(ErrorKind::malformed_input, "missing orbits header");
    if (o.group == "perms" && o.perms.empty()) throw Error(ErrorKind::malformed_input, "group=perms without perm lines");
    return o;
}

OrbitFile read_orbits_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::malformed_input, "cannot open " + path);
    return read_orbits(in);
}

void write_orbits(std::ostream& out, const OrbitFile& o, const std::vector<std::string>& comments)
{
    for (const auto& line : comments) out << "# " << line << '\n';
    out << "orbits n=" << o.n << " group=" << o.group << '\n';
    for (const auto& p : o.perms) out << "perm: " << p.cycles() << '\n';
    for (const auto& g : o.generators) {
        for (size_t i = 0; i < g.size(); ++i) out << (i ? " " : "") << g[i];
        out << '\n';
    }
}

std::string data_dir()
{
    if (const char* env = std::getenv("HOPFFORGE_DATA"); env && *env) return env;
#ifdef HOPFFORGE_DEFAULT_DATA
    return HOPFFORGE_DEFAULT_DATA;
#else
    return "data";
#endif
}

std::string sha256_hex(const std::string& bytes)
{
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
        throw Error(ErrorKind::corrupted_data, "sha256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
    return out.str();
}

std::vector<DatasetEntry> dataset_manifest()
{
    std::string path = data_dir() + "/MANIFEST";
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::corrupted_data, "cannot open dataset manifest " + path);
    std::vector<DatasetEntry> out;
    std::string raw;
    while (std::getline(in, raw)) {
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream fields(s);
        DatasetEntry e;
        if (!(fields >> e.id >> e.file >> e.sha256)) throw Error(ErrorKind::corrupted_data, "bad manifest line: " + s);
        out.push_back(e);
    }
    return out;
}

namespace {

DatasetEntry find_dataset(const std::string& id)
{
    for (const auto& e : dataset_manifest())
        if (e.id == id) return e;
    throw Error(ErrorKind::usage, "unknown dataset '" + id + "'");
}

} // namespace

std::string dataset_bytes(const std::string& id)
{
    DatasetEntry e = find_dataset(id);
    std::ifstream in(data_dir() + "/" + e.file, std::ios::binary);
    if (!in) throw Error(ErrorKind::corrupted_data, "missing dataset file " + e.file);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (sha256_hex(bytes) != e.sha256) throw Error(ErrorKind::corrupted_data, "checksum mismatch for dataset " + id);
    return bytes;
}

std::string dataset_checksum(const std::string& id) { return find_dataset(id).sha256; }

Complex load_dataset_complex(const std::string& id)
{
    DatasetEntry e = find_dataset(id);
    std::istringstream in(dataset_bytes(id));
    if (e.file.size() > 4 && e.file.substr(e.file.size() - 4) == ".orb") return read_orbits(in).expand();
    return read_complex(in);
}

OrbitFile load_dataset_orbits(const std::string& id)
{
    std::istringstream in(dataset_bytes(id));
    return read_orbits(in);
}

} // namespace hopfforge
