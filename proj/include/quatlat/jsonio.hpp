#ifndef QUATLAT_JSONIO_HPP
#define QUATLAT_JSONIO_HPP

// JSON artifacts.  Every number is exact: rationals are "num/den" strings,
// ring elements two-element integer arrays; nothing floating anywhere.

#include <fstream>

#include <json.hpp>

#include "ideals.hpp"

namespace quatlat {

using ordered_json = nlohmann::ordered_json;

inline ordered_json scalar_to_json(const KNum& x) {
    if (x.is_integral()) {
        ordered_json j = ordered_json::array();
        if (x.a().num().fits_long() && x.b().num().fits_long()) {
            j.push_back(x.a().num().to_long());
            j.push_back(x.b().num().to_long());
        } else {
            j.push_back(x.a().num().str());
            j.push_back(x.b().num().str());
        }
        return j;
    }
    return ordered_json::array({x.a().str(), x.b().str()});
}

inline KNum scalar_from_json(const Field* F, const ordered_json& j) {
    require(j.is_array() && j.size() == 2, errc::invalid_argument, "bad scalar");
    auto part = [&](const ordered_json& v) {
        if (v.is_number_integer()) return Rat((long)v.get<long long>());
        return Rat(v.get<std::string>());
    };
    return KNum(F, part(j[0]), part(j[1]));
}

inline ordered_json quat_to_json(const Quat& q) {
    ordered_json j = ordered_json::array();
    for (int t = 0; t < 4; ++t) j.push_back(scalar_to_json(q[t]));
    return j;
}

inline Quat quat_from_json(const Algebra* A, const ordered_json& j) {
    require(j.is_array() && j.size() == 4, errc::invalid_argument, "bad quaternion");
    return Quat(A, scalar_from_json(A->F, j[0]), scalar_from_json(A->F, j[1]),
                scalar_from_json(A->F, j[2]), scalar_from_json(A->F, j[3]));
}

inline ordered_json lattice_to_json(const Lattice& L) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < 4; ++i) rows.push_back(quat_to_json(L.row(i)));
    return rows;
}

inline Lattice lattice_from_json(const Algebra* A, const ordered_json& j) {
    require(j.is_array() && j.size() == 4, errc::invalid_argument, "bad lattice");
    std::vector<Quat> g;
    for (const auto& r : j) g.push_back(quat_from_json(A, r));
    return Lattice::from_generators(A, g);
}

inline ordered_json algebra_to_json(const Algebra& A) {
    ordered_json j;
    j["field"] = ordered_json{{"d", A.F->d()}};
    j["a"] = scalar_to_json(A.a);
    j["b"] = scalar_to_json(A.b);
    return j;
}

inline ordered_json class_to_json(const LocalClass& c) {
    ordered_json j;
    j["class"] = cls_name(c.letter);
    j["s"] = c.s;
    j["dyadic"] = c.dyadic;
    if (!c.dyadic && (c.letter == Cls::B || c.letter == Cls::C)) {
        j["eps1_delta"] = c.eps1_delta;
        if (c.letter == Cls::C) j["eps2_delta"] = c.eps2_delta;
    }
    if (c.dyadic && !c.is_block()) j["delta"] = c.dy_delta;
    return j;
}

inline LocalClass class_from_json(const Local& L, const ordered_json& j) {
    auto letter = cls_from_name(j.at("class").get<std::string>());
    require(letter.has_value(), errc::unknown_class, "bad class name");
    int s = j.at("s").get<int>();
    bool dy = j.at("dyadic").get<bool>();
    if (dy) {
        long dv = j.contains("delta") ? j["delta"].get<long>() : 1;
        return detail::make_dyadic_class(L, *letter, s, dv);
    }
    bool e1 = j.contains("eps1_delta") && j["eps1_delta"].get<bool>();
    bool e2 = j.contains("eps2_delta") && j["eps2_delta"].get<bool>();
    return detail::make_odd_class(L, *letter, s, e1, e2);
}

inline ordered_json prime_to_json(const Prime& pr) {
    ordered_json j;
    j["p"] = pr.p;
    j["pi"] = scalar_to_json(pr.pi);
    j["eram"] = pr.eram;
    j["fdeg"] = pr.fdeg;
    return j;
}

inline Prime prime_from_json(const Field* F, const ordered_json& j) {
    long p = j.at("p").get<long>();
    KNum pi = scalar_from_json(F, j.at("pi"));
    for (const Prime& pr : factor_prime(F, p))
        if (pr.pi == pi) return pr;
    fail(errc::unsupported_prime, "prime in file does not match any factor of " + std::to_string(p));
}

// Per-order descriptor with discriminant data and per-prime class labels.
inline ordered_json order_descriptor(const Lattice& O, int precision = 6) {
    const Field* F = O.alg()->F;
    ordered_json j;
    j["basis"] = lattice_to_json(O);
    KNum d = reduced_discriminant(O);
    j["disc"] = scalar_to_json(d);
    ordered_json classes = ordered_json::array();
    std::vector<std::pair<Prime, int>> fac;
    if (!(F->is_unit(d))) fac = factor_discriminant(F, d);
    bool saw2 = false;
    for (auto& [pr, e] : fac) saw2 |= pr.p == 2;
    // always include the dyadic prime when it is supported
    if (!saw2) {
        try {
            fac.push_back({factor_prime(F, 2)[0], 0});
        } catch (const error&) {
            // dyadic prime unsupported in this field; skip
        }
    }
    std::sort(fac.begin(), fac.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [pr, e] : fac) {
        Local L = make_local(pr, precision);
        LocalClass c = classify_local_order(O, L);
        ordered_json cj = class_to_json(c);
        cj["p"] = pr.p;
        cj["pi"] = scalar_to_json(pr.pi);
        cj["hilbert"] = algebra_ramification(c, L);
        classes.push_back(std::move(cj));
    }
    j["classes"] = std::move(classes);
    return j;
}

inline ordered_json chain_to_json(const Algebra& A, const ChainResult& chain) {
    ordered_json j;
    j["algebra"] = algebra_to_json(A);
    ordered_json orders = ordered_json::array();
    for (const Lattice& O : chain.orders) orders.push_back(order_descriptor(O));
    j["orders"] = std::move(orders);
    ordered_json steps = ordered_json::array();
    for (const SuborderStep& st : chain.steps) {
        ordered_json sj;
        sj["prime"] = prime_to_json(st.pr);
        sj["from"] = class_to_json(st.from);
        sj["to"] = class_to_json(st.to);
        sj["e"] = st.e;
        sj["row"] = st.row_id;
        sj["variant"] = st.variant;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    return j;
}

// Rebuild the executable chain (with quasi-good bases) from the artifact.
inline ChainResult chain_from_json(const Algebra* A, const ordered_json& j, int precision = 6) {
    ChainResult out;
    for (const auto& oj : j.at("orders")) out.orders.push_back(lattice_from_json(A, oj.at("basis")));
    size_t k = 0;
    for (const auto& sj : j.at("steps")) {
        Prime pr = prime_from_json(A->F, sj.at("prime"));
        Local L = make_local(pr, precision);
        SuborderStep st;
        st.pr = pr;
        st.from = class_from_json(L, sj.at("from"));
        st.to = class_from_json(L, sj.at("to"));
        st.e = sj.at("e").get<int>();
        st.row_id = sj.at("row").get<int>();
        st.variant = sj.at("variant").get<int>();
        require(k + 1 < out.orders.size(), errc::invalid_argument, "steps do not match orders");
        st.parent = out.orders[k];
        st.child = out.orders[k + 1];
        st.qg = quasi_good_basis(st.parent, L, st.from);
        out.steps.push_back(std::move(st));
        ++k;
    }
    return out;
}

inline ordered_json classes_to_json(const Algebra& A, const ClassChainResult& res) {
    ordered_json j;
    j["algebra"] = algebra_to_json(A);
    j["class_numbers"] = ordered_json::array();
    for (auto& lvl : res.levels) j["class_numbers"].push_back(lvl.size());
    ordered_json levels = ordered_json::array();
    for (size_t k = 0; k < res.levels.size(); ++k) {
        ordered_json lj = ordered_json::array();
        for (const IdealClassEntry& ent : res.levels[k]) {
            ordered_json ej;
            ej["basis"] = lattice_to_json(ent.rep);
            ej["norm"] = scalar_to_json(norm_ideal(ent.rep));
            ej["right_units"] = ent.right_units;
            ej["parent"] = ent.parent;
            ej["orbit_size"] = ent.orbit_size;
            lj.push_back(std::move(ej));
        }
        levels.push_back(std::move(lj));
    }
    j["levels"] = std::move(levels);
    ordered_json reports = ordered_json::array();
    for (const StepReport& r : res.reports) {
        ordered_json rj;
        rj["prime"] = r.prime;
        rj["fibers"] = r.fiber_sizes;
        rj["identities"] = r.identity_lines;
        rj["cross_checked"] = r.cross_checked;
        reports.push_back(std::move(rj));
    }
    j["reports"] = std::move(reports);
    return j;
}

inline ordered_json read_json_file(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), errc::invalid_argument, "cannot open " + path);
    ordered_json j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const ordered_json& j) {
    std::ofstream out(path);
    require(out.good(), errc::invalid_argument, "cannot write " + path);
    out << j.dump(2) << "\n";
}

// Optional on-disk unit cache, keyed by the canonical basis matrix.
inline void load_unit_cache(UnitCache& cache, const std::string& dir, const Algebra* A) {
    std::ifstream in(dir + "/units.json");
    if (!in.good()) return;
    ordered_json j;
    in >> j;
    for (auto& [key, uj] : j.items()) {
        UnitGroup U;
        U.order = lattice_from_json(A, uj.at("order"));
        for (const auto& e : uj.at("elems")) U.elems.push_back(quat_from_json(A, e));
        cache.raw().emplace(key, std::move(U));
    }
}

inline void save_unit_cache(UnitCache& cache, const std::string& dir) {
    ordered_json j;
    for (auto& [key, U] : cache.raw()) {
        ordered_json uj;
        uj["order"] = lattice_to_json(U.order);
        ordered_json elems = ordered_json::array();
        for (const Quat& q : U.elems) elems.push_back(quat_to_json(q));
        uj["elems"] = std::move(elems);
        j[key] = std::move(uj);
    }
    std::ofstream out(dir + "/units.json");
    if (out.good()) out << j.dump() << "\n";
}

} // namespace quatlat

#endif
