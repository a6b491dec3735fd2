#ifndef QUATLAT_VERIFY_HPP
#define QUATLAT_VERIFY_HPP

// Re-derivation checks over serialized artifacts: both fiber methods, the
// partition bookkeeping, the fiber-counting identity, norms and unit counts.

#include <sstream>

#include "jsonio.hpp"

namespace quatlat {

struct VerifyResult {
    bool ok = true;
    std::string report;
};

inline VerifyResult verify_artifacts(const Algebra* A, const ordered_json& orders_j,
                                     const ordered_json& classes_j, UnitCache& units,
                                     int precision = 6) {
    VerifyResult res;
    std::ostringstream out;
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        out << (ok ? "ok   " : "FAIL ") << what << "\n";
        if (!ok) ++failures;
        return ok;
    };

    ChainResult chain = chain_from_json(A, orders_j, precision);
    const Field* F = A->F;
    out << "chain with " << chain.orders.size() << " orders over ";
    out << (F->rational() ? std::string("Q") : "Q(sqrt " + std::to_string(F->d()) + ")") << "\n";

    for (size_t k = 0; k < chain.orders.size(); ++k) {
        const Lattice& O = chain.orders[k];
        check(O.is_order(), "order " + std::to_string(k) + " is a ring with unity");
        KNum d = reduced_discriminant(O);
        check(scalar_to_json(d) == orders_j.at("orders").at(k).at("disc"),
              "order " + std::to_string(k) + " discriminant matches file: " + d.str());
    }
    for (size_t k = 0; k < chain.steps.size(); ++k) {
        const SuborderStep& st = chain.steps[k];
        check(st.parent.contains(st.child), "step " + std::to_string(k) + " nests");
        check(val(st.pr, index_ideal(st.parent, st.child)) == st.e,
              "step " + std::to_string(k) + " has index exponent " + std::to_string(st.e));
        Local L = make_local(st.pr, precision);
        check(classify_local_order(st.child, L) == st.to,
              "step " + std::to_string(k) + " child classifies to " + st.to.label());
    }

    // class levels
    std::vector<std::vector<Lattice>> levels;
    for (const auto& lj : classes_j.at("levels")) {
        std::vector<Lattice> lvl;
        for (const auto& ej : lj) lvl.push_back(lattice_from_json(A, ej.at("basis")));
        levels.push_back(std::move(lvl));
    }
    check(levels.size() == chain.orders.size(), "one class level per chain order");
    check(levels[0].size() == 1, "single class at the top");

    KNum n0 = norm_ideal(levels[0][0]);
    for (size_t k = 0; k + 1 < levels.size() && k < chain.steps.size(); ++k) {
        const SuborderStep& st = chain.steps[k];
        Local L = make_local(st.pr, precision);
        std::vector<IdealClassEntry> parents;
        for (size_t i = 0; i < levels[k].size(); ++i) {
            IdealClassEntry e;
            e.rep = levels[k][i];
            parents.push_back(e);
        }
        StepReport rep;
        std::vector<IdealClassEntry> fresh;
        bool step_ok = true;
        try {
            fresh = ideal_classes_step(st, L, parents, units, /*cross_check=*/true, &rep);
        } catch (const error& err) {
            step_ok = false;
            out << "FAIL step " << k << ": " << err.what() << "\n";
            ++failures;
        }
        if (!step_ok) continue;
        check(true, "step " + std::to_string(k) + " fibers agree between the local-units and colon-lattice methods");
        for (const std::string& line : rep.identity_lines)
            out << "     identity at " << rep.prime << ": " << line << "\n";
        check(fresh.size() == levels[k + 1].size(),
              "step " + std::to_string(k) + " class count " + std::to_string(fresh.size()));
        // representatives, parents, unit counts must match the artifact
        const auto& stored = classes_j.at("levels").at(k + 1);
        for (size_t i = 0; i < fresh.size() && i < stored.size(); ++i) {
            bool same = lattice_to_json(fresh[i].rep) == stored.at(i).at("basis") &&
                        fresh[i].parent == stored.at(i).at("parent").get<int>() &&
                        fresh[i].right_units == stored.at(i).at("right_units").get<long>();
            if (!check(same, "class " + std::to_string(i) + " at level " + std::to_string(k + 1) +
                                 " reproduced"))
                break;
        }
        // norms and the partition bookkeeping
        bool norms_ok = true, partition_ok = true;
        for (const IdealClassEntry& ent : fresh) {
            if (!(norm_ideal(ent.rep) == n0)) norms_ok = false;
            if (!(st.parent.mul(ent.rep) == parents[ent.parent].rep)) partition_ok = false;
        }
        check(norms_ok, "step " + std::to_string(k) + " preserves norms");
        check(partition_ok, "step " + std::to_string(k) + " partition: O J recovers each parent");
    }
    // unit-count sanity on the final level
    {
        const auto& stored = classes_j.at("levels").back();
        bool ok = true;
        for (size_t i = 0; i < levels.back().size(); ++i) {
            long cnt = units.get(right_order(levels.back()[i])).count();
            if (cnt != stored.at(i).at("right_units").get<long>()) ok = false;
        }
        check(ok, "final-level right-order unit counts match");
    }

    out << (failures == 0 ? "RESULT: PASS" : "RESULT: FAIL (" + std::to_string(failures) + ")")
        << "\n";
    res.ok = failures == 0;
    res.report = out.str();
    return res;
}

} // namespace quatlat

#endif
