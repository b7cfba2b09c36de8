#include "decilim/io_formats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace decilim {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    if (!poly_text.empty()) j["poly"] = poly_text;
    if (!poly_file.empty()) j["poly_file"] = poly_file;
    if (!N_list.empty()) j["N"] = N_list;
    if (!lattice.empty()) j["lattice"] = lattice;
    j["method"] = method;
    j["tol"] = format_double(tol);
    if (!box.empty()) j["box"] = box;
    if (!at.empty()) j["at"] = at;
    j["res"] = res;
    j["threads"] = threads;
    if (budget_bits_cap) j["budget_bits"] = budget_bits_cap;
    j["seed"] = seed;
    if (!out_path.empty()) j["out"] = out_path;
    return j;
}

nlohmann::json artifact_json(const RunConfig& cfg, nlohmann::json payload) {
    nlohmann::json j;
    j["version"] = kVersion;
    j["config"] = cfg.to_json();
    j["result"] = std::move(payload);
    return j;
}

nlohmann::json hull_to_json(const PolyhedralConcaveFn& fn) {
    nlohmann::json j;
    j["dim"] = fn.dim;
    j["generators"] = nlohmann::json::array();
    for (const auto& g : fn.generators) {
        nlohmann::json e;
        for (const auto& q : g.pos) e["r"].push_back(q.str());
        e["v"] = format_double(g.value);
        j["generators"].push_back(std::move(e));
    }
    j["facets"] = nlohmann::json::array();
    for (const auto& f : fn.facets) {
        nlohmann::json e;
        for (double g : f.gradient) e["gradient"].push_back(format_double(g));
        e["offset"] = format_double(f.offset);
        e["touching"] = f.touching;
        j["facets"].push_back(std::move(e));
    }
    j["domain_vertices"] = nlohmann::json::array();
    for (const auto& v : fn.domain_vertices()) {
        nlohmann::json e = nlohmann::json::array();
        for (const auto& q : v) e.push_back(q.str());
        j["domain_vertices"].push_back(std::move(e));
    }
    return j;
}

nlohmann::json raster_to_json(const AmoebaRaster& r) {
    nlohmann::json j;
    j["box"] = {r.box[0], r.box[1], r.box[2], r.box[3]};
    j["res"] = r.res;
    j["N"] = r.N;
    j["cells"] = r.cells;
    j["certified_components"] = count_certified_components(r);
    return j;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + path);
    out << content;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows,
                      const RunConfig& cfg) {
    std::string s = "# decilim " + std::string(kVersion) + " " + cfg.to_json().dump() + "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        s += (i ? "," : "") + header[i];
    s += "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            s += (i ? "," : "") + row[i];
        s += "\n";
    }
    return s;
}

std::string pgm_raster(const AmoebaRaster& r, const RunConfig& cfg) {
    int maxlevel = 1;
    for (int v : r.cells) maxlevel = std::max(maxlevel, v);
    std::string s = "P2\n# decilim " + std::string(kVersion) + " " +
                    cfg.to_json().dump() + "\n";
    s += std::to_string(r.res) + " " + std::to_string(r.res) + "\n255\n";
    // row 0 at the top = largest u2; grayscale by certifying level
    for (int j = r.res - 1; j >= 0; --j) {
        for (int i = 0; i < r.res; ++i) {
            int v = r.at(i, j);
            int g = v == 0 ? 0 : 64 + (255 - 64) * v / maxlevel;
            s += std::to_string(g);
            s += i + 1 == r.res ? '\n' : ' ';
        }
    }
    return s;
}

std::string off_mesh(const PolyhedralConcaveFn& fn, const RunConfig& cfg) {
    std::string s = "OFF\n# decilim " + std::string(kVersion) + " " +
                    cfg.to_json().dump() + "\n";
    s += std::to_string(fn.generators.size()) + " " + std::to_string(fn.facets.size()) +
         " 0\n";
    for (const auto& g : fn.generators) {
        double x = g.pos[0].to_double();
        double y = fn.dim >= 2 ? g.pos[1].to_double() : 0.0;
        s += format_double(x) + " " + format_double(y) + " " + format_double(g.value) + "\n";
    }
    for (const auto& f : fn.facets) {
        // order the touching generators around their centroid so the face is
        // a simple polygon
        std::vector<int> idx = f.touching;
        if (fn.dim >= 2 && idx.size() > 3) {
            double cx = 0, cy = 0;
            for (int i : idx) {
                cx += fn.generators[i].pos[0].to_double();
                cy += fn.generators[i].pos[1].to_double();
            }
            cx /= idx.size();
            cy /= idx.size();
            std::sort(idx.begin(), idx.end(), [&](int a, int b) {
                double aa = std::atan2(fn.generators[a].pos[1].to_double() - cy,
                                       fn.generators[a].pos[0].to_double() - cx);
                double bb = std::atan2(fn.generators[b].pos[1].to_double() - cy,
                                       fn.generators[b].pos[0].to_double() - cx);
                return aa < bb;
            });
        }
        s += std::to_string(idx.size());
        for (int i : idx) s += " " + std::to_string(i);
        s += "\n";
    }
    return s;
}

} // namespace decilim
