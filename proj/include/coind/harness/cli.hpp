#pragma once

#include "coind/harness/spec_file.hpp"
#include "coind/harness/suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace coind {

namespace cli_detail {

template <typename Map>
const typename Map::mapped_type& pick(const Map& m, const std::string& name, const std::string& kind) {
    if (!name.empty()) {
        auto it = m.find(name);
        if (it == m.end()) throw Error(ErrorKind::usage, "no " + kind + " named \"" + name + "\" in the spec file");
        return it->second;
    }
    if (m.size() == 1) return m.begin()->second;
    throw Error(ErrorKind::usage,
                m.empty() ? "the spec file declares no " + kind
                          : "several " + kind + "s declared; name one explicitly");
}

inline Filtration filtration_or_constant(const SpecFile& spec, const std::optional<std::string>& name,
                                         const GroupRef& g) {
    if (!name) return constant_filtration(g);
    auto it = spec.filtrations.find(*name);
    if (it == spec.filtrations.end()) throw Error(ErrorKind::usage, "no filtration named \"" + *name + "\"");
    if (it->second.parent.get() != g.get())
        throw Error(ErrorKind::usage, "filtration \"" + *name + "\" lives on a different group");
    return it->second;
}

inline ScfAction point_from_entry(const SpecFile& spec, const SpecFile::ActionEntry& entry) {
    auto actor_f = filtration_or_constant(spec, entry.actor_filtration, entry.action.actor);
    auto target_f = filtration_or_constant(spec, entry.target_filtration, entry.action.target);
    return validate_scf_action(entry.action, actor_f, target_f);
}

inline std::string orders_line(const Filtration& f) {
    std::string s;
    for (int i = 0; i < f.length(); ++i) {
        if (i) s += " ";
        s += std::to_string(static_cast<int>(f.chain[static_cast<size_t>(i)].count()));
    }
    return s;
}

struct OutputTarget {
    std::ofstream file;
    std::ostream* stream = nullptr;

    static OutputTarget make(const std::string& path, std::ostream& fallback) {
        OutputTarget t;
        if (path.empty()) {
            t.stream = &fallback;
        } else {
            t.file.open(path);
            if (!t.file) throw Error(ErrorKind::usage, "cannot open output path: " + path);
            t.stream = &t.file;
        }
        return t;
    }
    std::ostream& out() { return *stream; }
};

inline int emit_report(const VerificationReport& report, const std::string& format, const std::string& out_path,
                       std::ostream& fallback) {
    auto target = OutputTarget::make(out_path, fallback);
    target.out() << (format == "machine" ? render_machine(report) : render_human(report));
    return report.all_passed() ? 0 : 1;
}

}  // namespace cli_detail

/// CLI entry point. Exit codes: 0 success/verified, 1 verification failure
/// (with witness in the report), 2 usage/validation/budget errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coind: co-induction workbench for strongly central filtrations and finite topological groups"};
    app.require_subcommand(1);
    app.fallthrough();

    int budget_order = 8;
    unsigned long long seed = 1;
    std::string format = "human";
    std::string out_path;
    app.add_option("--budget", budget_order, "enumeration budget base order (default 8)");
    app.add_option("--seed", seed, "seed for randomized suites (default 1)");
    app.add_option("--format", format, "report format: human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    app.add_option("--out", out_path, "write the report to this path instead of stdout");

    std::string spec_path, name_a, name_b, name_c, action_name;

    auto* validate_cmd = app.add_subcommand("validate", "parse and validate a spec file");
    validate_cmd->add_option("spec", spec_path, "spec file path")->required();

    auto* lcs_cmd = app.add_subcommand("lcs", "lower central series of a group");
    lcs_cmd->add_option("spec", spec_path)->required();
    lcs_cmd->add_option("group", name_a, "group name (optional when unique)");

    auto* tinf_cmd = app.add_subcommand("t-infinity", "transport tower and its limit for an action");
    tinf_cmd->add_option("spec", spec_path)->required();
    tinf_cmd->add_option("action", name_a, "action name (optional when unique)");

    auto* coinduce_cmd = app.add_subcommand("coinduce", "co-induced point along a morphism");
    coinduce_cmd->add_option("spec", spec_path)->required();
    coinduce_cmd->add_option("alpha", name_a, "morphism name")->required();
    coinduce_cmd->add_option("point", name_b, "action name for the E-point Y")->required();

    auto* verify_cmd = app.add_subcommand("verify-adjunction", "verify the co-induction adjunction");
    verify_cmd->add_option("spec", spec_path)->required();
    verify_cmd->add_option("alpha", name_a, "morphism name")->required();
    verify_cmd->add_option("X", name_b, "action name for the B-point X")->required();
    verify_cmd->add_option("Y", name_c, "action name for the E-point Y")->required();

    auto* topco_cmd = app.add_subcommand("top-coinduce", "topological tower (G_l, tau_l) and its limit");
    topco_cmd->add_option("spec", spec_path)->required();
    topco_cmd->add_option("B", name_a, "actor topgroup name")->required();
    topco_cmd->add_option("G", name_b, "target topgroup name")->required();
    topco_cmd->add_option("action", name_c, "action name")->required();

    auto* verifytop_cmd = app.add_subcommand("verify-top", "verify the topological adjunction");
    verifytop_cmd->add_option("spec", spec_path)->required();
    verifytop_cmd->add_option("B", name_a, "actor topgroup name")->required();
    verifytop_cmd->add_option("G", name_b, "target topgroup name")->required();
    verifytop_cmd->add_option("--action", action_name, "action name (optional when unique match)");

    auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive maximum sub-filtration for an action");
    oracle_cmd->add_option("spec", spec_path)->required();
    oracle_cmd->add_option("action", name_a, "action name (optional when unique)");

    auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
    suite_cmd->add_option("name", name_a, "one of: transport-step, maximality-oracle, plain-coinduction, "
                                          "scf-adjunction, currying, top-adjunction, ground-truth")
        ->required();

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Budget budget = Budget::with_order(budget_order);

    try {
        if (*validate_cmd) {
            auto spec = parse_spec(spec_path);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            target.out() << "spec file ok: " << spec.groups.size() << " group(s), " << spec.filtrations.size()
                         << " filtration(s), " << spec.actions.size() << " action(s), " << spec.morphisms.size()
                         << " morphism(s), " << spec.topologies.size() << " topolog(ies), " << spec.topgroups.size()
                         << " topgroup(s)\n";
            return 0;
        }

        if (*lcs_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& g = cli_detail::pick(spec.groups, name_a, "group");
            auto f = lower_central_series(g);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            if (format == "machine") {
                nlohmann::json j = {{"record", "lcs"}, {"orders", f.level_orders()}};
                target.out() << j.dump() << "\n";
            } else {
                target.out() << "lower central series orders: " << cli_detail::orders_line(f) << "\n";
                for (int i = 0; i < f.length(); ++i)
                    target.out() << "  level " << (i + 1) << ": "
                                 << show_elems(*g, f.chain[static_cast<size_t>(i)]) << "\n";
            }
            return 0;
        }

        if (*tinf_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& entry = cli_detail::pick(spec.actions, name_a, "action");
            auto actor_f = cli_detail::filtration_or_constant(spec, entry.actor_filtration, entry.action.actor);
            auto target_f = cli_detail::filtration_or_constant(spec, entry.target_filtration, entry.action.target);
            auto tower = t_infinity(actor_f, target_f, entry.action);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            if (format == "machine") {
                nlohmann::json j = {{"record", "t-infinity"},
                                    {"iterations", tower.iterations},
                                    {"tower_levels", tower.levels.size()},
                                    {"limit_orders", tower.limit.level_orders()},
                                    {"certified", true}};
                target.out() << j.dump() << "\n";
            } else {
                target.out() << "tower stabilized after " << tower.iterations << " application(s); "
                             << tower.levels.size() << " distinct level(s)\n";
                for (size_t l = 0; l < tower.levels.size(); ++l)
                    target.out() << "  t^" << l << ": orders " << cli_detail::orders_line(tower.levels[l]) << "\n";
                target.out() << "limit orders: " << cli_detail::orders_line(tower.limit)
                             << " (certified action of the actor filtration)\n";
            }
            return 0;
        }

        if (*coinduce_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& morph = cli_detail::pick(spec.morphisms, name_a, "morphism");
            const auto& point_entry = cli_detail::pick(spec.actions, name_b, "action");
            auto e_f = cli_detail::filtration_or_constant(spec, morph.source_filtration, morph.hom.source);
            auto b_f = cli_detail::filtration_or_constant(spec, morph.target_filtration, morph.hom.target);
            auto y_point = cli_detail::point_from_entry(spec, point_entry);
            auto cp = coinduce(morph.hom, e_f, b_f, y_point, budget);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            if (format == "machine") {
                nlohmann::json j = {{"record", "coinduce"},
                                    {"carrier_order", cp.emg.carrier->order},
                                    {"pointwise_orders", cp.pointwise.level_orders()},
                                    {"limit_orders", cp.tower.limit.level_orders()},
                                    {"tower_levels", cp.tower.levels.size()},
                                    {"point_order", cp.point_group->order},
                                    {"certified", cp.point_scf.certified}};
                target.out() << j.dump() << "\n";
            } else {
                target.out() << "carrier hom_E(B,Y): order " << cp.emg.carrier->order << "\n"
                             << "pointwise filtration orders: " << cli_detail::orders_line(cp.pointwise) << "\n"
                             << "transport tower: " << cp.tower.levels.size() << " level(s), limit orders "
                             << cli_detail::orders_line(cp.tower.limit) << "\n"
                             << "co-induced point: order " << cp.point_group->order << ", certified "
                             << (cp.point_scf.certified ? "yes" : "no") << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& morph = cli_detail::pick(spec.morphisms, name_a, "morphism");
            const auto& x_entry = cli_detail::pick(spec.actions, name_b, "action");
            const auto& y_entry = cli_detail::pick(spec.actions, name_c, "action");
            AlphaData ad{morph.hom, cli_detail::filtration_or_constant(spec, morph.source_filtration, morph.hom.source),
                         cli_detail::filtration_or_constant(spec, morph.target_filtration, morph.hom.target)};
            auto x_point = cli_detail::point_from_entry(spec, x_entry);
            auto y_point = cli_detail::point_from_entry(spec, y_entry);
            auto report = verify_scf_adjunction(ad, x_point, y_point, budget);
            return cli_detail::emit_report(report, format, out_path, out);
        }

        if (*topco_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& b = cli_detail::pick(spec.topgroups, name_a, "topgroup");
            const auto& g = cli_detail::pick(spec.topgroups, name_b, "topgroup");
            const auto& entry = cli_detail::pick(spec.actions, name_c, "action");
            auto tower = t_top_infinity(b, g, entry.action);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            if (format == "machine") {
                nlohmann::json j = {{"record", "top-coinduce"},
                                    {"iterations", tower.iterations},
                                    {"tower_levels", tower.levels.size()},
                                    {"limit_order", tower.limit.tg.group->order},
                                    {"limit_opens", tower.limit.tg.top.count_opens(budget.opens_cap)},
                                    {"jointly_continuous", tower.limit_point.jointly_continuous}};
                target.out() << j.dump() << "\n";
            } else {
                target.out() << "tower stabilized after " << tower.iterations << " application(s); "
                             << tower.levels.size() << " distinct level(s)\n";
                for (size_t l = 0; l < tower.levels.size(); ++l)
                    target.out() << "  level " << l << ": order " << tower.levels[l].members.count() << "\n";
                target.out() << "limit: order " << tower.limit.tg.group->order << ", "
                             << tower.limit.tg.top.count_opens(budget.opens_cap) << " open set(s), joint continuity "
                             << (tower.limit_point.jointly_continuous ? "certified" : "FAILED") << "\n";
            }
            return tower.limit_point.jointly_continuous ? 0 : 1;
        }

        if (*verifytop_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& b = cli_detail::pick(spec.topgroups, name_a, "topgroup");
            const auto& g = cli_detail::pick(spec.topgroups, name_b, "topgroup");
            const SpecFile::ActionEntry* entry = nullptr;
            if (!action_name.empty()) {
                entry = &cli_detail::pick(spec.actions, action_name, "action");
            } else {
                for (const auto& [nm, e] : spec.actions)
                    if (e.action.actor.get() == b.group.get() && e.action.target.get() == g.group.get()) {
                        if (entry) throw Error(ErrorKind::usage, "several actions match; pass --action");
                        entry = &e;
                    }
                if (!entry) throw Error(ErrorKind::usage, "no action matching the two topgroups; pass --action");
            }
            auto report = verify_top_adjunction(b, g, entry->action, budget);
            return cli_detail::emit_report(report, format, out_path, out);
        }

        if (*oracle_cmd) {
            auto spec = parse_spec(spec_path);
            const auto& entry = cli_detail::pick(spec.actions, name_a, "action");
            auto actor_f = cli_detail::filtration_or_constant(spec, entry.actor_filtration, entry.action.actor);
            auto target_f = cli_detail::filtration_or_constant(spec, entry.target_filtration, entry.action.target);
            auto oracle = oracle_max_subfiltration(actor_f, target_f, entry.action, budget);
            auto tower = t_infinity(actor_f, target_f, entry.action);
            bool agree = same_filtration(oracle, tower.limit);
            auto target = cli_detail::OutputTarget::make(out_path, out);
            if (format == "machine") {
                nlohmann::json j = {{"record", "oracle"},
                                    {"oracle_orders", oracle.level_orders()},
                                    {"t_infinity_orders", tower.limit.level_orders()},
                                    {"agree", agree}};
                target.out() << j.dump() << "\n";
            } else {
                target.out() << "oracle maximum sub-filtration orders: " << cli_detail::orders_line(oracle) << "\n";
                for (int i = 0; i < oracle.length(); ++i)
                    target.out() << "  level " << (i + 1) << ": "
                                 << show_elems(*entry.action.target, oracle.chain[static_cast<size_t>(i)]) << "\n";
                target.out() << "t-infinity agreement: " << (agree ? "yes" : "NO") << "\n";
            }
            return agree ? 0 : 1;
        }

        if (*suite_cmd) {
            auto report = run_suite(name_a, seed, budget);
            return cli_detail::emit_report(report, format, out_path, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace coind
