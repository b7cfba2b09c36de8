#include "decilim/parser.hpp"

#include <cctype>

#include <nlohmann/json.hpp>

namespace decilim {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() { skip_ws(); return pos >= s.size(); }
    char peek() { skip_ws(); return pos < s.size() ? s[pos] : '\0'; }
    char take() { skip_ws(); return s[pos++]; }
};

long parse_int(Cursor& c, const char* what) {
    c.skip_ws();
    std::size_t start = c.pos;
    bool neg = false;
    if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) {
        neg = c.s[c.pos] == '-';
        ++c.pos;
    }
    if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        throw ParseError(std::string("expected ") + what, start);
    long v = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        v = v * 10 + (c.s[c.pos] - '0');
        if (v > 1000000) throw ParseError("exponent too large", start);
        ++c.pos;
    }
    return neg ? -v : v;
}

// variable index from "x"/"y"/"z" or "x<k>"; -1 if not at a variable
int parse_var(Cursor& c, int& max_index, bool& named_xyz) {
    c.skip_ws();
    if (c.pos >= c.s.size()) return -1;
    char ch = c.s[c.pos];
    if (ch == 'x') {
        std::size_t next = c.pos + 1;
        if (next < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[next]))) {
            c.pos = next;
            int idx = 0;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
                idx = idx * 10 + (c.s[c.pos] - '0');
                if (idx > 64) throw ParseError("variable index too large", next);
                ++c.pos;
            }
            if (idx == 0) throw ParseError("variable index must be >= 1", next);
            max_index = std::max(max_index, idx);
            return idx - 1;
        }
        ++c.pos;
        named_xyz = true;
        max_index = std::max(max_index, 1);
        return 0;
    }
    if (ch == 'y' || ch == 'z') {
        ++c.pos;
        named_xyz = true;
        int idx = ch == 'y' ? 2 : 3;
        max_index = std::max(max_index, idx);
        return idx - 1;
    }
    return -1;
}

struct RawTerm {
    BigInt coeff;
    std::map<int, long> exps;
};

} // namespace

LaurentPoly parse_poly(const std::string& text, std::optional<int> dim_hint) {
    Cursor c{text};
    std::vector<RawTerm> raw;
    int max_index = 0;
    bool named_xyz = false;

    bool first = true;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = ch == '-' ? -1 : 1;
            c.take();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.pos);
        }
        first = false;

        RawTerm term;
        term.coeff = sign;
        bool have_factor = false;

        c.skip_ws();
        if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
            std::size_t start = c.pos;
            while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
            term.coeff *= BigInt(text.substr(start, c.pos - start));
            have_factor = true;
        }

        while (true) {
            c.skip_ws();
            bool saw_star = false;
            if (c.pos < c.s.size() && c.s[c.pos] == '*') {
                if (!have_factor)
                    throw ParseError("'*' without a preceding factor", c.pos);
                saw_star = true;
                ++c.pos;
                c.skip_ws();
            }
            int var = parse_var(c, max_index, named_xyz);
            if (var < 0) {
                if (saw_star) throw ParseError("expected a variable after '*'", c.pos);
                break;
            }
            long e = 1;
            c.skip_ws();
            if (c.pos < c.s.size() && c.s[c.pos] == '^') {
                ++c.pos;
                e = parse_int(c, "exponent");
            }
            term.exps[var] += e;
            have_factor = true;
        }

        if (!have_factor)
            throw ParseError("expected a coefficient or variable", c.pos);
        raw.push_back(std::move(term));
    }
    if (raw.empty()) throw ParseError("empty polynomial", 0);

    int dim = std::max(max_index, 1);
    if (dim_hint) {
        if (*dim_hint < max_index)
            throw DimensionError("polynomial uses " + std::to_string(max_index) +
                                 " variables but dim hint is " + std::to_string(*dim_hint));
        dim = *dim_hint;
    }
    if (named_xyz && dim > 3 && !dim_hint)
        throw DimensionError("named variables x,y,z support d <= 3");

    LaurentPoly f(dim);
    for (const auto& t : raw) {
        Exp e(dim, 0);
        for (const auto& [var, ex] : t.exps) e[var] = static_cast<std::int32_t>(ex);
        f.set_coeff(e, f.coeff(e) + t.coeff);
    }
    return f;
}

std::string print_poly(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    const int d = f.dim();
    auto var_name = [&](int i) {
        if (d <= 3) return std::string(1, "xyz"[i]);
        return "x" + std::to_string(i + 1);
    };

    std::string out;
    // descending graded-lex, matching the usual display of decimations
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        BigInt a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        bool is_const = std::all_of(e.begin(), e.end(), [](auto v) { return v == 0; });
        bool coeff_one = a == 1;
        if (!coeff_one || is_const) out += a.get_str();
        bool printed_var = false;
        for (int i = 0; i < d; ++i) {
            if (e[i] == 0) continue;
            if (!coeff_one || printed_var) out += "*";
            out += var_name(i);
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
            printed_var = true;
        }
    }
    return out;
}

std::string poly_to_json(const LaurentPoly& f) {
    nlohmann::json j;
    j["d"] = f.dim();
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : f.terms()) {
        nlohmann::json t;
        t["e"] = e;
        t["c"] = c.get_str();
        j["terms"].push_back(std::move(t));
    }
    return j.dump();
}

LaurentPoly poly_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("bad polynomial JSON: ") + e.what(), 0);
    }
    if (!j.contains("d") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs \"d\" and \"terms\"", 0);
    LaurentPoly f(j["d"].get<int>());
    for (const auto& t : j["terms"]) {
        Exp e = t["e"].get<Exp>();
        if (static_cast<int>(e.size()) != f.dim())
            throw DimensionError("term exponent length does not match d");
        f.set_coeff(e, f.coeff(e) + BigInt(t["c"].get<std::string>()));
    }
    return f;
}

} // namespace decilim
