// decilim: decimations, concave hulls, Ronkin functions, and contractions of
// integer Laurent polynomials. See README.md for the artifact formats.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "decilim/contraction.hpp"
#include "decilim/hull.hpp"
#include "decilim/io_formats.hpp"
#include "decilim/parallel.hpp"
#include "decilim/parser.hpp"
#include "decilim/reference.hpp"
#include "decilim/ronkin.hpp"

using namespace decilim;

namespace {

struct CommonOpts {
    std::string poly_text, poly_file, out, method = "auto";
    std::vector<int> N_list = {2};
    std::vector<int> lattice;
    std::vector<double> box = {-2, 2, -2, 2};
    std::vector<double> at;
    std::string at_rat;
    double tol = 1e-5;
    int res = 64;
    int threads = 0;
    std::int64_t budget = 0;
    std::uint64_t seed = 1;
    bool machine = false;
    long terms = 1000000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("-f,--poly", o.poly_text, "polynomial, e.g. \"1+x+y\"");
    cmd->add_option("--poly-file", o.poly_file, "file with polynomial text or JSON");
    cmd->add_option("--method", o.method, "auto|doubling|norm")->default_str("auto");
    cmd->add_option("--tol", o.tol, "tolerance")->default_val(1e-5);
    cmd->add_option("--res", o.res, "raster/grid resolution")->default_val(64);
    cmd->add_option("--threads", o.threads, "worker threads (0 = default)");
    cmd->add_option("--budget-bits", o.budget, "coefficient budget in bits");
    cmd->add_option("--seed", o.seed, "seed for randomized choices")->default_val(1);
    cmd->add_flag("--machine", o.machine, "structured JSON errors on stderr");
    cmd->add_option("-o,--out", o.out, "output path (or prefix for multi-file runs)");
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> out;
    auto dots = s.find("..");
    if (dots != std::string::npos) {
        int a = std::stoi(s.substr(0, dots));
        int b = std::stoi(s.substr(dots + 2));
        for (int n = a; n <= b; ++n) out.push_back(n);
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    if (out.empty()) throw CLI::ValidationError("--N", "empty N list");
    return out;
}

DecimationMethod method_of(const std::string& m) {
    if (m == "auto") return DecimationMethod::Auto;
    if (m == "doubling") return DecimationMethod::Doubling;
    if (m == "norm") return DecimationMethod::Norm;
    throw DomainError("unknown method: " + m);
}

LaurentPoly load_poly(const CommonOpts& o) {
    std::string text = o.poly_text;
    if (!o.poly_file.empty()) {
        std::ifstream in(o.poly_file);
        if (!in) throw Error("cannot read polynomial file: " + o.poly_file);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        // file may hold either the text grammar or the JSON form
        auto first = text.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && text[first] == '{') return poly_from_json(text);
    }
    if (text.empty()) throw DomainError("no polynomial given: use -f or --poly-file");
    return parse_poly(text);
}

RunConfig config_of(const std::string& command, const CommonOpts& o) {
    RunConfig cfg;
    cfg.command = command;
    cfg.poly_text = o.poly_text;
    cfg.poly_file = o.poly_file;
    cfg.N_list = o.N_list;
    cfg.lattice = o.lattice;
    cfg.method = o.method;
    cfg.tol = o.tol;
    cfg.box = o.box;
    cfg.at = o.at;
    cfg.res = o.res;
    cfg.threads = o.threads;
    cfg.budget_bits_cap = o.budget;
    cfg.seed = o.seed;
    cfg.machine = o.machine;
    cfg.out_path = o.out;
    return cfg;
}

void emit(const RunConfig& cfg, const nlohmann::json& payload) {
    std::string text = artifact_json(cfg, payload).dump(2) + "\n";
    if (cfg.out_path.empty())
        std::fputs(text.c_str(), stdout);
    else
        write_text_file(cfg.out_path, text);
}

std::vector<Rat> parse_rat_vector(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto slash = tok.find('/');
        if (slash == std::string::npos)
            out.push_back(Rat(std::stoll(tok)));
        else
            out.push_back(Rat(std::stoll(tok.substr(0, slash)),
                              std::stoll(tok.substr(slash + 1))));
    }
    return out;
}

PolyhedralConcaveFn hull_of(const LaurentPoly& f, int N, DecimationMethod m) {
    std::int64_t idx = 1;
    for (int i = 0; i < f.dim(); ++i) idx *= N;
    return concave_hull(log_rescale(decimate(f, N, m), idx));
}

// documented comparison grid for the limit command: domain vertices plus
// centroid rays at t in {0, 0.35, 0.7}
std::vector<std::vector<double>> limit_grid(const PolyhedralConcaveFn& fn) {
    std::vector<std::vector<double>> pts;
    auto verts = fn.domain_vertices();
    std::vector<double> cen(fn.dim, 0.0);
    for (const auto& v : verts)
        for (int i = 0; i < fn.dim; ++i) cen[i] += v[i].to_double() / verts.size();
    pts.push_back(cen);
    for (const auto& v : verts)
        for (double t : {0.35, 0.7}) {
            std::vector<double> p(fn.dim);
            for (int i = 0; i < fn.dim; ++i)
                p[i] = cen[i] + t * (v[i].to_double() - cen[i]);
            pts.push_back(std::move(p));
        }
    return pts;
}

int run(int argc, char** argv) {
    CLI::App app{"decimation limits of integer Laurent polynomials"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string n_arg = "2";

    auto* cmd_dec = app.add_subcommand("decimate", "compute f<N> exactly");
    auto* cmd_limit = app.add_subcommand("limit", "convergence table of D_N f with meshes");
    auto* cmd_hull = app.add_subcommand("hull", "concave hull D_N f as mesh + JSON");
    auto* cmd_ronkin = app.add_subcommand("ronkin", "Ronkin function values or surface");
    auto* cmd_dual = app.add_subcommand("dual", "decimation limit -R_f*(r) at a point");
    auto* cmd_amoeba = app.add_subcommand("amoeba", "amoeba-complement raster certificates");
    auto* cmd_contract = app.add_subcommand("contract", "g_N and e_N with f<N> = g_N^{e_N}");
    auto* cmd_degen = app.add_subcommand("degenerate", "root-ratio degeneracy report (d=1)");
    auto* cmd_asymlen = app.add_subcommand("asymlen", "asymptotic length table of g_N");
    auto* cmd_ref = app.add_subcommand("reference", "closed-form reference values");

    std::string points_csv;
    for (CLI::App* c :
         {cmd_dec, cmd_limit, cmd_hull, cmd_ronkin, cmd_dual, cmd_amoeba, cmd_contract,
          cmd_degen, cmd_asymlen, cmd_ref}) {
        add_common(c, o);
        c->add_option("-N,--N-list", n_arg, "N or list a,b,c or range a..b");
    }
    cmd_dec->add_option("--lattice", o.lattice, "rectangular lattice a1,a2,...");
    cmd_dec->add_option("--points-csv", points_csv, "also write L_N points as CSV");
    for (CLI::App* c : {cmd_ronkin, cmd_amoeba})
        c->add_option("--box", o.box, "u-box x0,x1,y0,y1")->expected(4);
    cmd_ronkin->add_option("--at", o.at, "evaluation point u");
    std::string at_r;
    cmd_dual->add_option("--at", at_r, "rational point r, e.g. 1/3,1/3")->required();
    cmd_ref->add_option("--at", at_r, "rational point r,s for the closed form");
    long terms = 1000000;
    cmd_ref->add_option("--terms", terms, "series truncation");

    CLI11_PARSE(app, argc, argv);

    o.N_list = parse_n_list(n_arg);
    if (o.threads > 0) set_thread_count(o.threads);
    if (const char* env = std::getenv("DECILIM_BUDGET_BITS"); env && o.budget == 0)
        o.budget = std::atoll(env);
    if (o.budget > 0) set_budget_bits(o.budget);

    DecimationMethod method = method_of(o.method);

    if (app.got_subcommand(cmd_dec)) {
        RunConfig cfg = config_of("decimate", o);
        LaurentPoly f = load_poly(o);
        LaurentPoly fN;
        std::int64_t index = 1;
        if (!o.lattice.empty()) {
            fN = decimate_lattice(f, {o.lattice, method});
            for (int a : o.lattice) index *= a;
        } else {
            fN = decimate(f, o.N_list[0], method);
            for (int i = 0; i < f.dim(); ++i) index *= o.N_list[0];
        }
        nlohmann::json j = nlohmann::json::parse(poly_to_json(fN));
        auto st = coeff_stats(fN);
        j["stats"] = {{"height", st.height.get_str()},
                      {"length", st.length.get_str()},
                      {"log_height", format_double(st.log_height)},
                      {"terms", st.term_count}};
        emit(cfg, j);
        if (!points_csv.empty()) {
            auto pts = log_rescale(fN, index);
            std::vector<std::vector<std::string>> rows;
            for (const auto& p : pts.points) {
                std::vector<std::string> row;
                for (const auto& q : p.pos) row.push_back(q.str());
                row.push_back(format_double(p.value));
                rows.push_back(std::move(row));
            }
            std::vector<std::string> header;
            for (int i = 0; i < f.dim(); ++i) header.push_back("r" + std::to_string(i + 1));
            header.push_back("value");
            write_text_file(points_csv, csv_table(header, rows, cfg));
        }
        return 0;
    }

    if (app.got_subcommand(cmd_limit)) {
        RunConfig cfg = config_of("limit", o);
        LaurentPoly f = load_poly(o);
        bool is_1xy = f == parse_poly("1+x+y");
        std::vector<std::vector<std::string>> rows;
        for (int N : o.N_list) {
            auto t0 = std::chrono::steady_clock::now();
            auto DN = hull_of(f, N, method);
            double sup = 0, radius = 0;
            for (const auto& p : limit_grid(DN)) {
                double dn = DN.eval(p);
                double ref;
                if (is_1xy) {
                    ref = reference::decimation_limit_1xy(p[0], p[1], 100000);
                    radius = std::max(radius, reference::decimation_limit_1xy_tail(p[0], p[1]));
                } else {
                    std::vector<Rat> r;
                    for (double x : p) {
                        // snap grid doubles to exact rationals over 10^6
                        r.push_back(Rat(static_cast<std::int64_t>(std::llround(x * 1e6)), 1000000));
                    }
                    ref = decimation_limit(f, r, 1e-4);
                    radius = std::max(radius, 1e-4);
                }
                if (std::isfinite(ref) && std::isfinite(dn))
                    sup = std::max(sup, std::abs(dn - ref));
            }
            double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            rows.push_back({std::to_string(N), format_double(sup),
                            format_double(DN.max_value()), format_double(radius),
                            format_double(secs)});
            if (!o.out.empty())
                write_text_file(o.out + "_N" + std::to_string(N) + ".off", off_mesh(DN, cfg));
        }
        std::string csv =
            csv_table({"N", "sup_distance", "max_DN", "radius", "seconds"}, rows, cfg);
        if (o.out.empty())
            std::fputs(csv.c_str(), stdout);
        else
            write_text_file(o.out + ".csv", csv);
        return 0;
    }

    if (app.got_subcommand(cmd_hull)) {
        RunConfig cfg = config_of("hull", o);
        LaurentPoly f = load_poly(o);
        auto DN = hull_of(f, o.N_list[0], method);
        emit(cfg, hull_to_json(DN));
        if (!o.out.empty())
            write_text_file(o.out + ".off", off_mesh(DN, cfg));
        return 0;
    }

    if (app.got_subcommand(cmd_ronkin)) {
        RunConfig cfg = config_of("ronkin", o);
        LaurentPoly f = load_poly(o);
        RonkinOptions ropt;
        ropt.tol = o.tol;
        ropt.seed = o.seed;
        if (!o.at.empty()) {
            auto r = ronkin(f, o.at, ropt);
            emit(cfg, {{"value", format_double(r.value)},
                       {"radius", format_double(r.radius)},
                       {"rigorous", r.rigorous}});
            return 0;
        }
        // surface sampling over the box (d = 2): JSON grid of R values
        if (f.dim() != 2) throw DomainError("surface sampling needs d = 2; use --at");
        const int n = o.res;
        std::vector<double> vals(static_cast<std::size_t>(n) * n);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                std::vector<double> u = {o.box[0] + (o.box[1] - o.box[0]) * i / (n - 1.0),
                                         o.box[2] + (o.box[3] - o.box[2]) * j / (n - 1.0)};
                vals[static_cast<std::size_t>(i) * n + j] =
                    fiber_jensen(f, u, 1, o.tol).value;
            }
        }
        nlohmann::json grid;
        grid["box"] = o.box;
        grid["res"] = n;
        for (double v : vals) grid["values"].push_back(format_double(v));
        emit(cfg, grid);
        return 0;
    }

    if (app.got_subcommand(cmd_dual)) {
        RunConfig cfg = config_of("dual", o);
        LaurentPoly f = load_poly(o);
        auto r = parse_rat_vector(at_r);
        double v = decimation_limit(f, r, o.tol);
        nlohmann::json j;
        for (const auto& q : r) j["r"].push_back(q.str());
        j["value"] = std::isfinite(v) ? nlohmann::json(format_double(v))
                                      : nlohmann::json("-inf");
        emit(cfg, j);
        return 0;
    }

    if (app.got_subcommand(cmd_amoeba)) {
        RunConfig cfg = config_of("amoeba", o);
        LaurentPoly f = load_poly(o);
        double box[4] = {o.box[0], o.box[1], o.box[2], o.box[3]};
        auto raster = amoeba_scan(f, box, o.res, o.N_list[0]);
        emit(cfg, raster_to_json(raster));
        if (!o.out.empty())
            write_text_file(o.out + ".pgm", pgm_raster(raster, cfg));
        return 0;
    }

    if (app.got_subcommand(cmd_contract)) {
        RunConfig cfg = config_of("contract", o);
        LaurentPoly f = load_poly(o);
        auto c = contract(f, o.N_list[0], method);
        emit(cfg, {{"g", print_poly(c.gN)},
                   {"e", c.eN},
                   {"g_json", nlohmann::json::parse(poly_to_json(c.gN))},
                   {"fN_terms", c.fN.term_count()}});
        return 0;
    }

    if (app.got_subcommand(cmd_degen)) {
        RunConfig cfg = config_of("degenerate", o);
        LaurentPoly f = load_poly(o);
        auto rep = degenerate_ratios(f);
        emit(cfg, {{"resultant", print_poly(rep.resultant)},
                   {"degenerate", rep.has_nontrivial_cyclotomic},
                   {"witnesses", rep.witnesses}});
        return 0;
    }

    if (app.got_subcommand(cmd_asymlen)) {
        RunConfig cfg = config_of("asymlen", o);
        LaurentPoly f = load_poly(o);
        auto table = asymptotic_length(f, o.N_list, o.tol);
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : table.rows)
            rows.push_back({std::to_string(r.N), std::to_string(r.eN),
                            r.length.get_str(), format_double(r.norm_log_len)});
        std::string csv = csv_table({"N", "e_N", "length", "norm_log_length"}, rows, cfg);
        csv += "# m(f) = " + format_double(table.mahler_reference) + "\n";
        if (o.out.empty())
            std::fputs(csv.c_str(), stdout);
        else
            write_text_file(o.out, csv);
        return 0;
    }

    if (app.got_subcommand(cmd_ref)) {
        RunConfig cfg = config_of("reference", o);
        nlohmann::json j;
        j["smyth"] = format_double(reference::smyth_constant(terms));
        if (!at_r.empty()) {
            auto r = parse_rat_vector(at_r);
            if (r.size() == 1) {
                j["golden_limit"] = format_double(reference::golden_limit(r[0].to_double()));
            } else {
                double rr = r[0].to_double(), ss = r[1].to_double();
                j["decimation_limit_1xy"] =
                    format_double(reference::decimation_limit_1xy(rr, ss, terms));
                j["tail_bound"] =
                    format_double(reference::decimation_limit_1xy_tail(rr, ss, terms));
            }
        }
        emit(cfg, j);
        return 0;
    }

    return 1;
}

void report_error(bool machine, const char* kind, const std::string& what) {
    if (machine) {
        nlohmann::json e = {{"error", kind}, {"message", what}};
        std::fprintf(stderr, "%s\n", e.dump().c_str());
    } else {
        std::fprintf(stderr, "decilim: %s: %s\n", kind, what.c_str());
    }
}

} // namespace

int main(int argc, char** argv) {
    bool machine = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--machine") machine = true;
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        report_error(machine, "budget", e.what());
        return 2;
    } catch (const NumericError& e) {
        report_error(machine, "numeric", e.what());
        return 3;
    } catch (const ParseError& e) {
        report_error(machine, "usage", e.what());
        return 1;
    } catch (const Error& e) {
        report_error(machine, "usage", e.what());
        return 1;
    } catch (const std::exception& e) {
        report_error(machine, "usage", e.what());
        return 1;
    }
}
