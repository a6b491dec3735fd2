// quatlat command line: construct suborder chains of a given genus inside a
// quaternion order and enumerate representatives of their left ideal classes.

#include <CLI11.hpp>

#include <quatlat/jsonio.hpp>
#include <quatlat/presets.hpp>
#include <quatlat/verify.hpp>

#include <cstdlib>
#include <iostream>
#include <memory>

using namespace quatlat;

namespace {

std::vector<std::unique_ptr<Algebra>> g_algebras;

struct OrderArgs {
    std::string preset = "maximal-sqrt5";
    std::string order_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--preset", preset,
                        "built-in maximal order (maximal-sqrt5, hurwitz, maximal-q3)");
        cmd->add_option("--order", order_file, "JSON file with {algebra, basis}");
    }
    std::pair<const Algebra*, Lattice> resolve() const {
        if (!order_file.empty()) {
            ordered_json j = read_json_file(order_file);
            const ordered_json& aj = j.contains("algebra") ? j.at("algebra") : j;
            const Field* F = Field::get(aj.at("field").at("d").get<long>());
            g_algebras.push_back(std::make_unique<Algebra>(F, scalar_from_json(F, aj.at("a")),
                                                           scalar_from_json(F, aj.at("b"))));
            const Algebra* A = g_algebras.back().get();
            const ordered_json& bj = j.contains("basis") ? j.at("basis") : j.at("orders").at(0).at("basis");
            return {A, lattice_from_json(A, bj)};
        }
        Preset p = preset_by_name(preset);
        return {p.algebra, p.order};
    }
};

std::vector<std::pair<Prime, std::pair<Cls, int>>> build_targets(const Field* F, long disc,
                                                                 const std::string& genus) {
    std::map<long, Cls> letters;
    if (!genus.empty()) {
        std::stringstream ss(genus);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            require(eq != std::string::npos, errc::invalid_argument, "bad --genus entry: " + item);
            long p = std::stol(item.substr(0, eq));
            auto letter = cls_from_name(item.substr(eq + 1));
            require(letter.has_value(), errc::invalid_argument, "bad class in --genus: " + item);
            letters[p] = *letter;
        }
    }
    require(disc >= 1, errc::invalid_argument, "discriminant must be a positive integer");
    std::vector<std::pair<Prime, std::pair<Cls, int>>> targets;
    for (auto& [pr, e] : factor_discriminant(F, F->make(disc))) {
        Cls letter = letters.count(pr.p) ? letters[pr.p] : Cls::A1;
        targets.push_back({pr, {letter, e}});
    }
    return targets;
}

int run(int argc, char** argv) {
    CLI::App app{"Bass suborders and left ideal class representatives in quaternion orders"};
    app.require_subcommand(1);

    auto* c_classify = app.add_subcommand("classify", "per-prime local classes of an order");
    OrderArgs classify_args;
    classify_args.attach(c_classify);
    std::string classify_out;
    c_classify->add_option("--out", classify_out, "write JSON here instead of stdout");

    auto* c_sub = app.add_subcommand("suborder", "one maximal-suborder step");
    OrderArgs sub_args;
    sub_args.attach(c_sub);
    long sub_p = 0;
    std::string sub_target = "A1";
    int sub_s = -1;
    std::string sub_out;
    c_sub->add_option("--at", sub_p, "rational prime to descend at")->required();
    c_sub->add_option("--target", sub_target, "target class letter (default A1)");
    c_sub->add_option("--target-s", sub_s, "target disc exponent (default: one step down)");
    c_sub->add_option("--out", sub_out, "write the suborder JSON here");

    auto* c_chain = app.add_subcommand("chain", "suborder chain to a target discriminant");
    OrderArgs chain_args;
    chain_args.attach(c_chain);
    long chain_disc = 0;
    std::string chain_genus, chain_out = "orders.json";
    c_chain->add_option("--disc", chain_disc, "target reduced discriminant (rational integer)")
        ->required();
    c_chain->add_option("--genus", chain_genus, "per-prime class letters, e.g. 3=A2,5=A1");
    c_chain->add_option("--out", chain_out, "output artifact (default orders.json)");

    auto* c_cls = app.add_subcommand("ideal-classes", "left ideal class representatives");
    OrderArgs cls_args;
    cls_args.attach(c_cls);
    long cls_disc = 0;
    std::string cls_genus, cls_out = "classes.json", cls_orders_out, cls_method = "local";
    c_cls->add_option("--disc", cls_disc, "target reduced discriminant")->required();
    c_cls->add_option("--genus", cls_genus, "per-prime class letters");
    c_cls->add_option("--method", cls_method, "local | both (both cross-checks the colon method)");
    c_cls->add_option("--out", cls_out, "output artifact (default classes.json)");
    c_cls->add_option("--orders-out", cls_orders_out, "also write the chain artifact");

    auto* c_ver = app.add_subcommand("verify", "re-derive and check serialized artifacts");
    std::string ver_orders, ver_classes, ver_out = "verify.txt";
    c_ver->add_option("--orders", ver_orders, "orders.json from `chain`")->required();
    c_ver->add_option("--classes", ver_classes, "classes.json from `ideal-classes`")->required();
    c_ver->add_option("--out", ver_out, "report file (default verify.txt)");

    CLI11_PARSE(app, argc, argv);

    if (c_classify->parsed()) {
        auto [A, O] = classify_args.resolve();
        require(O.is_order(), errc::invalid_argument, "input lattice is not an order");
        ordered_json j = order_descriptor(O);
        j["algebra"] = algebra_to_json(*A);
        if (classify_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            write_json_file(classify_out, j);
        return 0;
    }
    if (c_sub->parsed()) {
        auto [A, O] = sub_args.resolve();
        require(O.is_order(), errc::invalid_argument, "input lattice is not an order");
        Prime pr = factor_prime(A->F, sub_p)[0];
        Local L = make_local(pr, 6);
        LocalClass from = classify_local_order(O, L);
        auto letter = cls_from_name(sub_target);
        require(letter.has_value(), errc::invalid_argument, "bad --target");
        int goal = sub_s;
        if (goal < 0) {
            for (int cand = from.disc_exponent() + 1; cand <= from.disc_exponent() + 2; ++cand) {
                try {
                    descent_path(from, L, *letter, cand);
                    goal = cand;
                    break;
                } catch (const error&) {
                }
            }
            require(goal >= 0, errc::unreachable, "no class of that letter directly beneath");
        }
        std::vector<LocalClass> path = descent_path(from, L, *letter, goal);
        require(!path.empty(), errc::invalid_argument, "already of the requested class");
        SuborderStep st = maximal_suborder(O, L, from, path[0]);
        ordered_json j = order_descriptor(st.child);
        j["algebra"] = algebra_to_json(*A);
        if (sub_out.empty())
            std::cout << j.dump(2) << "\n";
        else
            write_json_file(sub_out, j);
        return 0;
    }
    if (c_chain->parsed()) {
        auto [A, O] = chain_args.resolve();
        require(O.is_order(), errc::invalid_argument, "input lattice is not an order");
        auto targets = build_targets(A->F, chain_disc, chain_genus);
        ChainResult chain = suborder_chain(O, targets);
        write_json_file(chain_out, chain_to_json(*A, chain));
        std::cout << "wrote " << chain_out << " with " << chain.orders.size() << " orders\n";
        for (const Lattice& ord : chain.orders)
            std::cout << "  disc " << reduced_discriminant(ord).str() << "\n";
        return 0;
    }
    if (c_cls->parsed()) {
        auto [A, O] = cls_args.resolve();
        require(O.is_order(), errc::invalid_argument, "input lattice is not an order");
        auto targets = build_targets(A->F, cls_disc, cls_genus);
        ChainResult chain = suborder_chain(O, targets);
        UnitCache units;
        const char* cache_dir = std::getenv("QUATLAT_CACHE_DIR");
        if (cache_dir) load_unit_cache(units, cache_dir, A);
        require(cls_method == "local" || cls_method == "both", errc::invalid_argument,
                "--method must be local or both");
        bool cross = cls_method == "both";
        ClassChainResult res = ideal_classes(chain, units, cross);
        if (!cls_orders_out.empty()) write_json_file(cls_orders_out, chain_to_json(*A, chain));
        write_json_file(cls_out, classes_to_json(*A, res));
        if (cache_dir) save_unit_cache(units, cache_dir);
        std::cout << "wrote " << cls_out << "; class numbers:";
        for (auto& lvl : res.levels) std::cout << " " << lvl.size();
        std::cout << "\n";
        for (const StepReport& r : res.reports)
            for (const std::string& line : r.identity_lines)
                std::cout << "  identity at " << r.prime << ": " << line << "\n";
        return 0;
    }
    if (c_ver->parsed()) {
        ordered_json oj = read_json_file(ver_orders);
        ordered_json cj = read_json_file(ver_classes);
        const ordered_json& aj = oj.at("algebra");
        const Field* F = Field::get(aj.at("field").at("d").get<long>());
        g_algebras.push_back(std::make_unique<Algebra>(F, scalar_from_json(F, aj.at("a")),
                                                       scalar_from_json(F, aj.at("b"))));
        const Algebra* A = g_algebras.back().get();
        UnitCache units;
        const char* cache_dir = std::getenv("QUATLAT_CACHE_DIR");
        if (cache_dir) load_unit_cache(units, cache_dir, A);
        VerifyResult vr = verify_artifacts(A, oj, cj, units);
        std::ofstream out(ver_out);
        out << vr.report;
        std::cout << vr.report;
        if (cache_dir) save_unit_cache(units, cache_dir);
        return vr.ok ? 0 : 4;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code()) {
            case errc::unsupported_field:
            case errc::unsupported_prime: return 3;
            case errc::invalid_argument: return 2;
            case errc::method_disagreement:
            case errc::identity_violated: return 4;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
