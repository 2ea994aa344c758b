#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "hopfforge/complex.hpp"
#include "hopfforge/symmetry.hpp"

namespace hopfforge {

// SCX v1: '#' comment lines, header "scx dim=<d> n=<vertices>", one facet per line.
Complex read_scx(std::istream& in);
Complex read_scx_file(const std::string& path);
void write_scx(std::ostream& out, const Complex& c, const std::vector<std::string>& comments = {});
std::string to_scx(const Complex& c);

nlohmann::json complex_to_json(const Complex& c);
Complex complex_from_json(const nlohmann::json& j);

// Reads SCX or JSON, decided by the first non-blank character.
Complex read_complex(std::istream& in);
Complex read_complex_file(const std::string& path);

struct OrbitFile {
    Label n = 0;
    std::string group;                    // "cyclic" or "perms"
    std::vector<Permutation> perms;
    std::vector<Simplex> generators;

    GroupAction action() const;
    Complex expand() const;
    // Orbit of each generator, in generator order.
    std::vector<std::vector<Simplex>> orbits() const;
};

OrbitFile read_orbits(std::istream& in);
OrbitFile read_orbits_file(const std::string& path);
void write_orbits(std::ostream& out, const OrbitFile& o, const std::vector<std::string>& comments = {});

// Dataset directory: $HOPFFORGE_DATA, else the source tree's data/.
std::string data_dir();

struct DatasetEntry {
    std::string id;
    std::string file;
    std::string sha256;
};

std::vector<DatasetEntry> dataset_manifest();
std::string sha256_hex(const std::string& bytes);
// Raw file content after checksum validation (corrupted_data on mismatch).
std::string dataset_bytes(const std::string& id);
std::string dataset_checksum(const std::string& id);
Complex load_dataset_complex(const std::string& id);
OrbitFile load_dataset_orbits(const std::string& id);

} // namespace hopfforge
