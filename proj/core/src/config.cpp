#include "skewgoppa/config.hpp"

#include <algorithm>
#include <sstream>

#include "skewgoppa/errors.hpp"

namespace skewgoppa {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

uint64_t parse_uint(const std::string& v, int line) {
    if (v.empty()) throw ParseError(line, "expected an integer");
    uint64_t out = 0;
    for (char c : v) {
        if (c < '0' || c > '9') throw ParseError(line, "expected an integer, got '" + v + "'");
        uint64_t next = out * 10 + static_cast<uint64_t>(c - '0');
        if (next < out) throw ParseError(line, "integer overflow in '" + v + "'");
        out = next;
    }
    return out;
}

std::vector<uint64_t> parse_list(const std::string& v, int line) {
    std::string s = trim(v);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError(line, "expected a bracketed list [a, b, ...]");
    s = trim(s.substr(1, s.size() - 2));
    std::vector<uint64_t> out;
    if (s.empty()) return out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) out.push_back(parse_uint(trim(item), line));
    return out;
}

struct IndexedKey {
    std::string base;
    size_t index = 0; // 1-based, 0 when the key carries no index
};

IndexedKey split_key(const std::string& key, int line) {
    size_t dot = key.find('.');
    if (dot == std::string::npos) return {key, 0};
    std::string base = key.substr(0, dot);
    std::string suffix = key.substr(dot + 1);
    if (base == "ginv") return {key, 0}; // ginv.a / ginv.v / ginv.l are literal keys
    uint64_t idx = parse_uint(suffix, line);
    if (idx == 0) throw ParseError(line, "indices are 1-based");
    return {base, static_cast<size_t>(idx)};
}

InstanceConfig::Family family_from(const std::string& name, int line) {
    if (name == "grs") return InstanceConfig::Family::grs;
    if (name == "goppa") return InstanceConfig::Family::goppa;
    if (name == "mgoppa") return InstanceConfig::Family::mgoppa;
    if (name == "acar") return InstanceConfig::Family::acar;
    if (name == "gsrs") return InstanceConfig::Family::gsrs;
    if (name == "gsg") return InstanceConfig::Family::gsg;
    if (name == "gsmg") return InstanceConfig::Family::gsmg;
    throw ParseError(line, "unknown family '" + name + "'");
}

} // namespace

const char* family_name(InstanceConfig::Family f) {
    switch (f) {
        case InstanceConfig::Family::grs: return "grs";
        case InstanceConfig::Family::goppa: return "goppa";
        case InstanceConfig::Family::mgoppa: return "mgoppa";
        case InstanceConfig::Family::acar: return "acar";
        case InstanceConfig::Family::gsrs: return "gsrs";
        case InstanceConfig::Family::gsg: return "gsg";
        case InstanceConfig::Family::gsmg: return "gsmg";
    }
    return "?";
}

InstanceConfig parse_config(const std::string& text) {
    InstanceConfig cfg;
    std::map<size_t, std::vector<uint64_t>> sets, factors;
    bool have_family = false, have_p = false;

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        size_t hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError(line, "empty key");
        if (!cfg.key_lines.emplace(key, line).second)
            throw ParseError(line, "duplicate key '" + key + "'");

        IndexedKey ik = split_key(key, line);
        if (ik.base == "family") {
            cfg.family = family_from(val, line);
            have_family = true;
        } else if (ik.base == "p") {
            cfg.p = static_cast<uint32_t>(parse_uint(val, line));
            have_p = true;
        } else if (ik.base == "s") {
            cfg.s = static_cast<uint32_t>(parse_uint(val, line));
        } else if (ik.base == "t") {
            cfg.t = static_cast<uint32_t>(parse_uint(val, line));
        } else if (ik.base == "r") {
            cfg.r = static_cast<uint32_t>(parse_uint(val, line));
        } else if (ik.base == "modulus") {
            auto lst = parse_list(val, line);
            cfg.modulus = std::vector<uint32_t>(lst.begin(), lst.end());
        } else if (ik.base == "set") {
            if (ik.index == 0) throw ParseError(line, "use set.1, set.2, ...");
            sets[ik.index] = parse_list(val, line);
        } else if (ik.base == "g") {
            if (ik.index == 0) throw ParseError(line, "use g.1, g.2, ...");
            factors[ik.index] = parse_list(val, line);
        } else if (key == "ginv.a") {
            cfg.ginv_a = parse_uint(val, line);
        } else if (key == "ginv.v") {
            cfg.ginv_v = parse_list(val, line);
        } else if (key == "ginv.l") {
            cfg.ginv_l = parse_uint(val, line);
        } else if (ik.base == "eta") {
            cfg.eta = parse_list(val, line);
        } else if (ik.base == "k") {
            cfg.k = parse_uint(val, line);
        } else if (ik.base == "budget") {
            cfg.budget = parse_uint(val, line);
        } else {
            throw ParseError(line, "unknown key '" + key + "'");
        }
    }

    if (!have_family) throw ParseError(0, "missing key 'family'");
    if (!have_p) throw ParseError(0, "missing key 'p'");

    auto collect_contiguous = [&](std::map<size_t, std::vector<uint64_t>>& src,
                                  const char* what) {
        std::vector<std::vector<uint64_t>> out;
        for (size_t i = 1; src.count(i); ++i) out.push_back(src[i]);
        if (out.size() != src.size())
            throw ParseError(0, std::string(what) + " indices must be contiguous from 1");
        return out;
    };
    cfg.sets = collect_contiguous(sets, "set.i");
    cfg.factors = collect_contiguous(factors, "g.i");

    using F = InstanceConfig::Family;
    auto need = [&](bool cond, const std::string& what) {
        if (!cond)
            throw ParseError(0, std::string("family '") + family_name(cfg.family) +
                                    "' requires " + what);
    };
    const bool has_ginv = cfg.ginv_a || cfg.ginv_v || cfg.ginv_l;
    if (has_ginv)
        need(cfg.ginv_a && cfg.ginv_v && cfg.ginv_l, "all of ginv.a, ginv.v, ginv.l together");
    switch (cfg.family) {
        case F::grs:
        case F::gsrs:
            need(cfg.sets.size() == 1, "exactly one point set (set.1)");
            need(!cfg.eta.empty(), "multipliers (eta)");
            need(cfg.k.has_value(), "a dimension k");
            need(cfg.factors.empty() && !has_ginv, "no Goppa polynomial");
            break;
        case F::goppa:
            need(cfg.sets.size() == 1 && cfg.factors.size() == 1, "set.1 and g.1");
            need(!has_ginv, "no ginv block (the polynomial is commutative)");
            break;
        case F::mgoppa:
        case F::acar:
            need(!cfg.sets.empty(), "at least set.1");
            need(cfg.factors.size() == cfg.sets.size(), "one g.i per set.i");
            need(!has_ginv, "no ginv block (factors are commutative)");
            break;
        case F::gsg:
            need(cfg.sets.size() == 1, "exactly one point set (set.1)");
            need(!cfg.eta.empty(), "multipliers (eta)");
            need(has_ginv != (cfg.factors.size() == 1),
                 "the twisted factor as either ginv.* or g.1 (not both)");
            break;
        case F::gsmg:
            need(!cfg.sets.empty(), "at least set.1");
            need(!cfg.eta.empty(), "multipliers (eta, one per element of the last set)");
            if (has_ginv)
                need(cfg.factors.size() + 1 == cfg.sets.size(),
                     "g.1..g.{m-1} plus the ginv block");
            else
                need(cfg.factors.size() == cfg.sets.size(),
                     "g.1..g.m with g.m the twisted factor");
            break;
    }
    return cfg;
}

namespace {

std::vector<Elem> to_elems(const Field& f, const std::vector<uint64_t>& codes,
                           const std::string& key, int line) {
    std::vector<Elem> out;
    out.reserve(codes.size());
    for (uint64_t c : codes) {
        if (c >= f.order())
            throw HypothesisError(key + " (line " + std::to_string(line) +
                                  "): element code " + std::to_string(c) +
                                  " is outside the field of order " + std::to_string(f.order()));
        out.push_back(f.elem(c));
    }
    return out;
}

InvariantSpec twisted_spec(const Field& f, const InstanceConfig& cfg, size_t poly_index) {
    if (cfg.ginv_a) {
        Elem a = to_elems(f, {*cfg.ginv_a}, "ginv.a", cfg.line_of("ginv.a"))[0];
        std::vector<Elem> v = to_elems(f, *cfg.ginv_v, "ginv.v", cfg.line_of("ginv.v"));
        return make_invariant_spec(f, a, std::move(v),
                                   static_cast<uint32_t>(*cfg.ginv_l));
    }
    std::string key = "g." + std::to_string(poly_index + 1);
    auto coeffs = to_elems(f, cfg.factors[poly_index], key, cfg.line_of(key));
    SkewPoly g(f, std::move(coeffs));
    if (g.is_zero()) throw HypothesisError(key + ": the twisted factor must be nonzero");
    auto spec = is_invariant(g);
    if (!spec)
        throw HypothesisError(key + ": the twisted factor is not invariant (it must have the "
                              "form a*v(X^t)*X^l with v over F_q)");
    return *spec;
}

} // namespace

ParameterReport BuiltInstance::report() const {
    return parameter_report(code, deg_g, factor_degrees, k_upper_claimed, mds_claimed, rank_h,
                            cfg.budget);
}

BuiltInstance build_instance(const InstanceConfig& cfg) {
    std::unique_ptr<Field> field;
    try {
        field = std::make_unique<Field>(cfg.p, cfg.s, cfg.t, cfg.r, cfg.modulus);
    } catch (const std::invalid_argument& e) {
        throw HypothesisError(std::string("field block: ") + e.what());
    }
    const Field& f = *field;
    using F = InstanceConfig::Family;

    std::vector<std::vector<Elem>> sets;
    for (size_t i = 0; i < cfg.sets.size(); ++i) {
        std::string key = "set." + std::to_string(i + 1);
        sets.push_back(to_elems(f, cfg.sets[i], key, cfg.line_of(key)));
    }
    std::vector<Elem> eta = to_elems(f, cfg.eta, "eta", cfg.line_of("eta"));

    auto make_poly = [&](size_t i) {
        std::string key = "g." + std::to_string(i + 1);
        return Poly(f, to_elems(f, cfg.factors[i], key, cfg.line_of(key)));
    };

    switch (cfg.family) {
        case F::grs: {
            LinearCode code = grs(f, sets[0], eta, static_cast<size_t>(*cfg.k));
            Matrix parity = kernel_basis(code.gen());
            uint64_t degg = sets[0].size() - code.dim();
            return BuiltInstance{std::move(field),  cfg,  std::move(code),
                                 std::move(parity), {},   degg,
                                 {static_cast<uint32_t>(degg)}, true, true, std::nullopt};
        }
        case F::gsrs: {
            GseResult res = gse(f, sets[0], eta, static_cast<size_t>(*cfg.k));
            Matrix parity = kernel_basis(res.code.gen());
            uint64_t degg = sets[0].size() - res.code.dim();
            // GSE codes below full Vandermonde rank carry no parameter claims
            return BuiltInstance{std::move(field),  cfg,          std::move(res.code),
                                 std::move(parity), {},           degg,
                                 {static_cast<uint32_t>(degg)},   res.is_gsrs, res.is_gsrs,
                                 std::nullopt};
        }
        case F::goppa: {
            Poly g = make_poly(0);
            LinearCode code = goppa_classical(f, sets[0], g);
            Matrix parity = grs_via_goppa(f, sets[0], g).gen();
            size_t rk = rank(parity);
            uint64_t degg = static_cast<uint64_t>(g.deg());
            return BuiltInstance{std::move(field),  cfg, std::move(code),
                                 std::move(parity), {},  degg,
                                 {static_cast<uint32_t>(degg)}, true, false, rk};
        }
        case F::mgoppa:
        case F::acar: {
            std::vector<Poly> polys;
            std::vector<uint32_t> degs;
            uint64_t degg = 1;
            for (size_t i = 0; i < cfg.factors.size(); ++i) {
                polys.push_back(make_poly(i));
                if (polys.back().is_zero())
                    throw HypothesisError("g." + std::to_string(i + 1) + ": zero factor");
                degs.push_back(static_cast<uint32_t>(polys.back().deg()));
                degg *= degs.back();
            }
            if (cfg.family == F::mgoppa) {
                LinearCode code = multivariate_goppa(f, sets, polys);
                Matrix parity = Matrix::identity(f, 1);
                for (size_t i = 0; i < polys.size(); ++i)
                    parity = kronecker(parity, grs_via_goppa(f, sets[i], polys[i]).gen());
                size_t rk = rank(parity);
                return BuiltInstance{std::move(field),  cfg, std::move(code),
                                     std::move(parity), {},  degg,
                                     degs, true, false, rk};
            }
            LinearCode code = acar(f, sets, polys);
            Matrix parity = kernel_basis(code.gen());
            return BuiltInstance{std::move(field),  cfg, std::move(code),
                                 std::move(parity), {},  degg,
                                 degs, true, false, std::nullopt};
        }
        case F::gsg: {
            InvariantSpec spec = twisted_spec(f, cfg, 0);
            GsgResult res = gsg(f, sets[0], eta, spec);
            size_t rk = rank(res.H);
            uint32_t rho = spec.rho(f);
            return BuiltInstance{std::move(field), cfg,   std::move(res.code),
                                 std::move(res.H), std::move(res.factors),
                                 rho,              {rho}, res.inverse_hypothesis,
                                 false,            rk};
        }
        case F::gsmg: {
            std::vector<Poly> commutative;
            for (size_t i = 0; i + 1 < sets.size(); ++i) commutative.push_back(make_poly(i));
            InvariantSpec spec = twisted_spec(f, cfg, sets.size() - 1);
            GoppaInstance inst =
                make_goppa_instance(f, sets, std::move(commutative), spec, eta);
            GsmgResult res = gsmg(inst);
            size_t rk = rank(res.H);
            return BuiltInstance{std::move(field),
                                 cfg,
                                 std::move(res.code),
                                 std::move(res.H),
                                 {},
                                 inst.gf.product_degree(),
                                 inst.gf.factor_degrees(),
                                 true,
                                 false,
                                 rk};
        }
    }
    throw std::logic_error("unreachable family");
}

ArtifactTexts artifact_texts(const BuiltInstance& inst) {
    ArtifactTexts out;
    out.generator = to_text(inst.code);
    out.parity = to_text(inst.parity);
    if (inst.factors) {
        const ParityFactors& pf = *inst.factors;
        const Field& f = inst.code.field();
        std::ostringstream os;
        os << "reduced = " << (pf.reduced ? 1 : 0) << '\n';
        auto diag_text = [&](const std::vector<Elem>& d) {
            Matrix m(f, 1, d.size());
            for (size_t j = 0; j < d.size(); ++j) m.at(0, j) = d[j];
            return to_text(m);
        };
        os << "Hprime\n" << to_text(pf.Hprime);
        os << "R\n" << diag_text(pf.Rdiag);
        os << "E\n" << diag_text(pf.Ediag);
        if (pf.reduced) {
            os << "D\n" << diag_text(pf.Ddiag);
            os << "W\n" << to_text(pf.Hreduced);
            os << "T\n" << to_text(pf.T);
        }
        out.factors = os.str();
    }
    return out;
}

std::string format_report(const BuiltInstance& inst, const ParameterReport& rep) {
    std::ostringstream os;
    os << "family = " << family_name(inst.cfg.family) << '\n';
    os << "field = " << inst.code.field().describe() << '\n';
    os << "alphabet = " << alphabet_token(inst.code.alphabet()) << '\n';
    os << "n = " << rep.n << '\n';
    os << "k = " << rep.k << '\n';
    os << "deg_g = " << inst.deg_g << '\n';
    os << "k_lower = " << rep.k_lower << '\n';
    os << "k_upper = " << rep.k_upper << '\n';
    os << "k_lower_check = " << (rep.k_lower_ok ? "PASS" : "FAIL") << '\n';
    if (rep.k_upper_claimed)
        os << "k_upper_check = " << (rep.k_upper_ok ? "PASS" : "FAIL") << '\n';
    else
        os << "k_upper_check = SKIP (hypothesis not satisfied)" << '\n';
    if (rep.rank_h) os << "rank_H = " << *rep.rank_h << '\n';
    switch (rep.distance.kind) {
        case DistanceResult::Kind::exact:
            os << "d = " << rep.distance.value << '\n';
            os << "d_bound = " << rep.d_bound << '\n';
            os << "d_check = " << (rep.d_bound_ok ? "PASS" : "FAIL") << '\n';
            if (rep.mds_claimed)
                os << "mds_check = " << (rep.mds_ok ? "PASS" : "FAIL") << '\n';
            break;
        case DistanceResult::Kind::budget_exceeded:
            os << "d = budget exceeded" << '\n';
            os << "d_bound = " << rep.d_bound << '\n';
            os << "d_check = SKIP (budget exceeded)" << '\n';
            break;
        case DistanceResult::Kind::zero_code:
            os << "d = undefined (zero code)" << '\n';
            os << "d_bound = " << rep.d_bound << '\n';
            os << "d_check = SKIP (zero code)" << '\n';
            break;
    }
    return os.str();
}

} // namespace skewgoppa
