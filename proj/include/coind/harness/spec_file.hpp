#pragma once

#include "coind/action.hpp"
#include "coind/topgroup.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <string>

namespace coind {

/// A named object graph parsed from a "coind-lab/1" file. Every object is run
/// through its module validator at parse time; references resolve by name.
struct SpecFile {
    struct ActionEntry {
        GroupAction action;
        std::optional<std::string> actor_filtration, target_filtration;
    };
    struct MorphismEntry {
        Homomorphism hom;
        std::optional<std::string> source_filtration, target_filtration;
    };

    std::string version;
    std::map<std::string, GroupRef> groups;
    std::map<std::string, Filtration> filtrations;
    std::map<std::string, ActionEntry> actions;
    std::map<std::string, MorphismEntry> morphisms;
    std::map<std::string, FiniteTopology> topologies;
    std::map<std::string, TopGroup> topgroups;
};

namespace detail {

[[noreturn]] inline void fail_parse(const std::string& msg) { throw Error(ErrorKind::parse, msg); }

inline ElemSet set_from_json(int n, const nlohmann::json& j, const std::string& where) {
    if (!j.is_array()) fail_parse(where + ": expected an array of element indices");
    std::vector<int> xs;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail_parse(where + ": expected integer element indices");
        xs.push_back(v.get<int>());
    }
    return set_from(n, xs);
}

template <typename Map>
const typename Map::mapped_type& resolve(const Map& m, const std::string& name, const std::string& kind,
                                         const std::string& where) {
    auto it = m.find(name);
    if (it == m.end()) fail_parse(where + ": reference to unknown " + kind + " \"" + name + "\"");
    return it->second;
}

}  // namespace detail

inline SpecFile parse_spec_json(const nlohmann::json& doc) {
    using detail::fail_parse;
    SpecFile spec;
    if (!doc.is_object()) fail_parse("spec file: top level must be an object");
    if (!doc.contains("version") || !doc["version"].is_string()) fail_parse("spec file: missing version field");
    spec.version = doc["version"].get<std::string>();
    if (spec.version != "coind-lab/1")
        fail_parse("spec file: unsupported version \"" + spec.version + "\" (expected \"coind-lab/1\")");

    if (doc.contains("groups"))
        for (const auto& [name, body] : doc["groups"].items()) {
            const std::string where = "group \"" + name + "\"";
            if (!body.contains("order") || !body.contains("names") || !body.contains("mul"))
                fail_parse(where + ": requires order, names and mul fields");
            int order = body["order"].get<int>();
            std::vector<std::string> names = body["names"].get<std::vector<std::string>>();
            std::vector<int> mul = body["mul"].get<std::vector<int>>();
            std::optional<int> identity;
            if (body.contains("identity")) identity = body["identity"].get<int>();
            try {
                spec.groups[name] = validate_group(order, std::move(names), std::move(mul), identity);
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
        }

    if (doc.contains("filtrations"))
        for (const auto& [name, body] : doc["filtrations"].items()) {
            const std::string where = "filtration \"" + name + "\"";
            if (!body.contains("group") || !body.contains("levels")) fail_parse(where + ": requires group and levels");
            const auto& g = detail::resolve(spec.groups, body["group"].get<std::string>(), "group", where);
            std::vector<ElemSet> levels;
            for (const auto& lv : body["levels"]) levels.push_back(detail::set_from_json(g->order, lv, where));
            try {
                spec.filtrations.emplace(name, make_filtration(g, std::move(levels)));
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
        }

    if (doc.contains("actions"))
        for (const auto& [name, body] : doc["actions"].items()) {
            const std::string where = "action \"" + name + "\"";
            if (!body.contains("actor") || !body.contains("target") || !body.contains("act"))
                fail_parse(where + ": requires actor, target and act fields");
            const auto& b = detail::resolve(spec.groups, body["actor"].get<std::string>(), "group", where);
            const auto& g = detail::resolve(spec.groups, body["target"].get<std::string>(), "group", where);
            std::vector<int> table;
            const auto& rows = body["act"];
            if (!rows.is_array() || static_cast<int>(rows.size()) != b->order)
                fail_parse(where + ": act must list one permutation of target indices per actor element");
            for (const auto& row : rows) {
                auto r = row.get<std::vector<int>>();
                if (static_cast<int>(r.size()) != g->order) fail_parse(where + ": act row size mismatch");
                table.insert(table.end(), r.begin(), r.end());
            }
            SpecFile::ActionEntry entry;
            try {
                entry.action = validate_group_action(b, g, std::move(table));
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
            if (body.contains("actor_filtration")) {
                entry.actor_filtration = body["actor_filtration"].get<std::string>();
                detail::resolve(spec.filtrations, *entry.actor_filtration, "filtration", where);
            }
            if (body.contains("target_filtration")) {
                entry.target_filtration = body["target_filtration"].get<std::string>();
                detail::resolve(spec.filtrations, *entry.target_filtration, "filtration", where);
            }
            spec.actions.emplace(name, std::move(entry));
        }

    if (doc.contains("morphisms"))
        for (const auto& [name, body] : doc["morphisms"].items()) {
            const std::string where = "morphism \"" + name + "\"";
            if (!body.contains("source") || !body.contains("target") || !body.contains("map"))
                fail_parse(where + ": requires source, target and map fields");
            const auto& s = detail::resolve(spec.groups, body["source"].get<std::string>(), "group", where);
            const auto& t = detail::resolve(spec.groups, body["target"].get<std::string>(), "group", where);
            SpecFile::MorphismEntry entry;
            try {
                entry.hom = validate_homomorphism(s, t, body["map"].get<std::vector<int>>());
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
            if (body.contains("source_filtration")) {
                entry.source_filtration = body["source_filtration"].get<std::string>();
                detail::resolve(spec.filtrations, *entry.source_filtration, "filtration", where);
            }
            if (body.contains("target_filtration")) {
                entry.target_filtration = body["target_filtration"].get<std::string>();
                detail::resolve(spec.filtrations, *entry.target_filtration, "filtration", where);
            }
            spec.morphisms.emplace(name, std::move(entry));
        }

    if (doc.contains("topologies"))
        for (const auto& [name, body] : doc["topologies"].items()) {
            const std::string where = "topology \"" + name + "\"";
            if (!body.contains("carrier") || !body.contains("opens")) fail_parse(where + ": requires carrier and opens");
            int n = body["carrier"].get<int>();
            std::vector<ElemSet> family;
            for (const auto& u : body["opens"]) family.push_back(detail::set_from_json(n, u, where));
            try {
                spec.topologies.emplace(name, validate_topology(n, family));
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
        }

    if (doc.contains("topgroups"))
        for (const auto& [name, body] : doc["topgroups"].items()) {
            const std::string where = "topgroup \"" + name + "\"";
            if (!body.contains("group") || !body.contains("topology")) fail_parse(where + ": requires group and topology");
            const auto& g = detail::resolve(spec.groups, body["group"].get<std::string>(), "group", where);
            const auto& t = detail::resolve(spec.topologies, body["topology"].get<std::string>(), "topology", where);
            try {
                spec.topgroups.emplace(name, validate_topgroup(g, t));
            } catch (const Error& e) {
                fail_parse(where + ": " + e.what());
            }
        }

    return spec;
}

inline SpecFile parse_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) detail::fail_parse("cannot open spec file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        detail::fail_parse(std::string("spec file parse error: ") + e.what());
    }
    return parse_spec_json(doc);
}

}  // namespace coind
