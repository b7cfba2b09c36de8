#ifndef DECILIM_IO_FORMATS_HPP
#define DECILIM_IO_FORMATS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "decilim/hull.hpp"
#include "decilim/ronkin.hpp"

namespace decilim {

inline const char* kVersion = "0.1.0";

// Everything needed to reproduce a run byte for byte.
struct RunConfig {
    std::string command;
    std::string poly_text;
    std::string poly_file;
    std::vector<int> N_list;
    std::vector<int> lattice;
    std::string method = "auto";
    double tol = 1e-5;
    std::vector<double> box;
    std::vector<double> at;
    int res = 64;
    int threads = 0;
    std::int64_t budget_bits_cap = 0;  // 0 = library default
    std::uint64_t seed = 1;
    bool machine = false;
    std::string out_path;

    nlohmann::json to_json() const;
};

// fixed 12-significant-digit float formatting used by all artifacts
std::string format_double(double v);

// {"version":..., "config":..., "result": payload}
nlohmann::json artifact_json(const RunConfig& cfg, nlohmann::json payload);

nlohmann::json hull_to_json(const PolyhedralConcaveFn& fn);
nlohmann::json raster_to_json(const AmoebaRaster& r);

void write_text_file(const std::string& path, const std::string& content);

// CSV with a header row; every cell preformatted
std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows,
                      const RunConfig& cfg);

// P2 raster: certified cells carry the certifying chain level, 0 otherwise
std::string pgm_raster(const AmoebaRaster& r, const RunConfig& cfg);

// OFF mesh of the hull graph: generator points lifted, hull facets as faces
std::string off_mesh(const PolyhedralConcaveFn& fn, const RunConfig& cfg);

} // namespace decilim

#endif
