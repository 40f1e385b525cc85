#include "subspace_lab/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace subspace_lab {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// "[a, b, c]" -> {"a", "b", "c"}
std::vector<std::string> parse_list(const std::string& s, const std::string& what) {
    std::string t = trim(s);
    if (t.size() < 2 || t.front() != '[' || t.back() != ']')
        throw config_error(what + ": expected [..] list, got '" + s + "'");
    std::vector<std::string> out;
    for (const auto& item : split(t.substr(1, t.size() - 2), ','))
        out.push_back(trim(item));
    if (out.size() == 1 && out[0].empty()) out.clear();
    return out;
}

// One multiplicative term: rational, name^k, or rational*name^k (any factor
// order, '*' separated).
NFElem parse_term(const std::string& term, const std::string& gen_name, const NFElem& gen) {
    NFElem acc(Rat(1));
    for (const auto& rawf : split(term, '*')) {
        std::string f = trim(rawf);
        if (f.empty()) throw config_error("empty factor in coefficient term '" + term + "'");
        std::size_t caret = f.find('^');
        std::string base = trim(caret == std::string::npos ? f : f.substr(0, caret));
        if (base == gen_name) {
            long k = 1;
            if (caret != std::string::npos) {
                std::string es = trim(f.substr(caret + 1));
                try {
                    k = std::stol(es);
                } catch (const std::exception&) {
                    throw config_error("bad exponent '" + es + "'");
                }
                if (k < 0) throw config_error("negative generator exponent in '" + f + "'");
            }
            acc = acc * pow(gen, k);
        } else {
            if (caret != std::string::npos)
                throw config_error("exponent on a rational factor in '" + f + "'");
            acc = acc * NFElem(Rat::parse(base));
        }
    }
    return acc;
}

// Sum of signed terms.
NFElem parse_coeff(const std::string& expr, const std::string& gen_name, const NFElem& gen) {
    NFElem acc(Rat(0));
    std::string cur;
    int sign = 1;
    bool any = false;
    auto flush = [&]() {
        std::string t = trim(cur);
        if (t.empty()) {
            if (any || sign < 0) throw config_error("dangling sign in '" + expr + "'");
            return;
        }
        NFElem v = parse_term(t, gen_name, gen);
        acc = sign > 0 ? acc + v : acc - v;
        any = true;
        cur.clear();
    };
    for (std::size_t i = 0; i < expr.size(); ++i) {
        char c = expr[i];
        if ((c == '+' || c == '-') && !trim(cur).empty()) {
            flush();
            sign = c == '-' ? -1 : 1;
        } else if (c == '-' && trim(cur).empty() && !any && i == 0) {
            sign = -1;
        } else {
            cur += c;
        }
    }
    flush();
    if (!any) throw config_error("empty coefficient in '" + expr + "'");
    return acc;
}

struct RawSection {
    std::string header;  // "" for top level
    std::vector<std::pair<std::string, std::string>> entries;
};

std::vector<RawSection> read_sections(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open system file '" + path + "'");
    std::vector<RawSection> secs;
    secs.push_back(RawSection{});
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        // strip comments outside quotes
        bool quoted = false;
        std::string kept;
        for (char c : line) {
            if (c == '"') quoted = !quoted;
            if (c == '#' && !quoted) break;
            kept += c;
        }
        std::string t = trim(kept);
        if (t.empty()) continue;
        if (t.front() == '[') {
            if (t.back() != ']')
                throw config_error(path + ":" + std::to_string(lineno) + ": unterminated section");
            secs.push_back(RawSection{trim(t.substr(1, t.size() - 2)), {}});
            continue;
        }
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (val.size() >= 2 && val.front() == '"' && val.back() == '"')
            val = val.substr(1, val.size() - 2);
        secs.back().entries.emplace_back(key, val);
    }
    return secs;
}

const std::string* find_entry(const RawSection& s, const std::string& key) {
    for (const auto& [k, v] : s.entries)
        if (k == key) return &v;
    return nullptr;
}

}  // namespace

AlgebraicReal parse_algebraic(const std::string& spec) {
    std::string poly_s, interval_s;
    for (const auto& part : split(spec, ';')) {
        std::string t = trim(part);
        if (t.empty()) continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error("algebraic spec: expected key=value in '" + t + "'");
        std::string key = trim(t.substr(0, eq));
        std::string val = trim(t.substr(eq + 1));
        if (key == "poly")
            poly_s = val;
        else if (key == "interval")
            interval_s = val;
        else
            throw config_error("algebraic spec: unknown key '" + key + "'");
    }
    if (poly_s.empty()) throw config_error("algebraic spec: missing poly");
    if (interval_s.empty()) throw config_error("algebraic spec: missing interval");
    std::vector<Rat> coeffs;
    for (const auto& c : parse_list(poly_s, "poly")) coeffs.push_back(Rat::parse(c));
    auto ends = parse_list(interval_s, "interval");
    if (ends.size() != 2) throw config_error("interval: expected [lo, hi]");
    return AlgebraicReal(Poly(std::move(coeffs)),
                         Interval(Rat::parse(ends[0]), Rat::parse(ends[1])));
}

FormSystem load_system(const std::string& path) {
    auto secs = read_sections(path);
    FormSystem sys;

    const RawSection& top = secs[0];
    auto need = [&](const char* key) {
        const std::string* v = find_entry(top, key);
        if (!v) throw config_error(path + ": missing top-level key '" + std::string(key) + "'");
        return *v;
    };
    sys.delta = Rat::parse(need("delta"));
    sys.H = Rat::parse(need("H"));
    {
        Rat n = Rat::parse(need("n")), d = Rat::parse(need("D")), r = Rat::parse(need("R"));
        if (!n.is_integer() || !d.is_integer() || !r.is_integer())
            throw config_error(path + ": n, D, R must be integers");
        sys.n = n.num().get_si();
        sys.D = d.num().get_si();
        sys.R = r.num().get_si();
    }
    if (sys.n < 2) throw config_error(path + ": n must be >= 2");

    // at most one generator
    std::string gen_name;
    NFElem gen(Rat(0));
    for (const auto& s : secs) {
        if (s.header.rfind("algebraic", 0) != 0) continue;
        if (!gen_name.empty()) throw config_error(path + ": multiple [algebraic] sections");
        gen_name = trim(s.header.substr(9));
        if (gen_name.empty()) throw config_error(path + ": [algebraic] needs a name");
        const std::string* poly = find_entry(s, "poly");
        const std::string* iv = find_entry(s, "interval");
        if (!poly || !iv) throw config_error(path + ": [algebraic] needs poly and interval");
        AlgebraicReal root = parse_algebraic("poly=" + *poly + ";interval=" + *iv);
        sys.field = std::make_shared<const NumberField>(root);
        gen = NFElem::generator(sys.field);
    }

    for (const auto& s : secs) {
        if (s.header.empty() || s.header.rfind("algebraic", 0) == 0) continue;
        if (s.header.rfind("place", 0) != 0)
            throw config_error(path + ": unknown section [" + s.header + "]");
        std::string vname = trim(s.header.substr(5));
        PlaceBlock pb;
        if (vname == "inf") {
            pb.v = Place::inf();
        } else {
            Rat p = Rat::parse(vname);
            if (!p.is_integer() || p <= Rat(1))
                throw config_error(path + ": place '" + vname + "' is not a prime");
            pb.v = Place::finite(p.num());
        }
        if (const std::string* c = find_entry(s, "C")) pb.C = Rat::parse(*c);
        for (const auto& [k, v] : s.entries) {
            if (k != "form") continue;
            auto halves = split(v, ';');
            if (halves.size() != 2)
                throw config_error(path + ": form needs 'coeffs ; c = value', got '" + v + "'");
            std::vector<NFElem> coeffs;
            for (const auto& ce : split(halves[0], ','))
                coeffs.push_back(parse_coeff(trim(ce), gen_name, gen));
            if (static_cast<long>(coeffs.size()) != sys.n)
                throw config_error(path + ": form has " + std::to_string(coeffs.size()) +
                                   " coefficients, system has n = " + std::to_string(sys.n));
            std::string cpart = trim(halves[1]);
            std::size_t eq = cpart.find('=');
            if (eq == std::string::npos || trim(cpart.substr(0, eq)) != "c")
                throw config_error(path + ": form exponent must be given as 'c = value'");
            pb.forms.emplace_back(std::move(coeffs));
            pb.exponents.push_back(Rat::parse(trim(cpart.substr(eq + 1))));
        }
        sys.places.push_back(std::move(pb));
    }
    if (sys.places.empty()) throw config_error(path + ": no [place ...] sections");
    return sys;
}

}  // namespace subspace_lab
