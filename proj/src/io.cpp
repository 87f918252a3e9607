#include "bnet/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bnet/error.hpp"

namespace bnet {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        fail(ErrorKind::ParseError, where + ": missing key '" + key + "'");
    return *it;
}

void escape_to(std::string& out, const std::string& s) {
    out += '"';
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            case '\r': out += "\\r"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buffer[8];
                    std::snprintf(buffer, sizeof(buffer), "\\u%04x", c);
                    out += buffer;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
}

void number_to(std::string& out, double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    out += buffer;
}

} // namespace

NetworkModel parse_network(const std::string& json_text) {
    const json j = parse_json(json_text);
    if (!j.is_object()) fail(ErrorKind::ParseError, "top level must be an object");

    const json& jvars = field(j, "variables", "network");
    if (!jvars.is_array()) fail(ErrorKind::ParseError, "variables: expected an array");
    if (jvars.empty()) fail(ErrorKind::ValidationError, "variables: empty list");

    std::vector<Variable> vars;
    for (std::size_t i = 0; i < jvars.size(); ++i) {
        const json& jv = jvars[i];
        const std::string where = "variables[" + std::to_string(i) + "]";
        if (!jv.is_object()) fail(ErrorKind::ParseError, where + ": expected an object");
        Variable v;
        v.id = static_cast<NodeId>(i);
        const json& jname = field(jv, "name", where);
        if (!jname.is_string()) fail(ErrorKind::ParseError, where + ".name: expected a string");
        v.name = jname.get<std::string>();
        const json& jstates = field(jv, "states", where);
        if (!jstates.is_array()) fail(ErrorKind::ParseError, where + ".states: expected an array");
        for (const json& s : jstates) {
            if (!s.is_string()) fail(ErrorKind::ParseError, where + ".states: expected strings");
            v.states.push_back(s.get<std::string>());
        }
        const json& jobs = field(jv, "observed", where);
        if (!jobs.is_boolean()) fail(ErrorKind::ParseError, where + ".observed: expected a bool");
        v.kind = jobs.get<bool>() ? VarKind::Observed : VarKind::Hidden;
        vars.push_back(std::move(v));
    }

    std::map<std::string, NodeId> by_name;
    for (const Variable& v : vars)
        by_name.emplace(v.name, v.id); // duplicates caught by validate below
    auto lookup = [&](const std::string& name, const std::string& where) -> NodeId {
        const auto it = by_name.find(name);
        if (it == by_name.end())
            fail(ErrorKind::UnknownName, where + ": unknown variable '" + name + "'");
        return it->second;
    };

    const json& jedges = field(j, "edges", "network");
    if (!jedges.is_array()) fail(ErrorKind::ParseError, "edges: expected an array");
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < jedges.size(); ++i) {
        const json& je = jedges[i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!je.is_array() || je.size() != 2 || !je[0].is_string() || !je[1].is_string())
            fail(ErrorKind::ParseError, where + ": expected [\"parent\",\"child\"]");
        edges.push_back({lookup(je[0].get<std::string>(), where),
                         lookup(je[1].get<std::string>(), where)});
    }

    NetworkModel net{build_dag(static_cast<int>(vars.size()), edges), std::move(vars), {}};

    const json& jcpts = field(j, "cpts", "network");
    if (!jcpts.is_object()) fail(ErrorKind::ParseError, "cpts: expected an object");
    net.cpts.resize(net.var_count());
    std::vector<bool> have(net.var_count(), false);
    for (auto it = jcpts.begin(); it != jcpts.end(); ++it) {
        const std::string where = "cpts." + it.key();
        const NodeId v = lookup(it.key(), where);
        const json& jc = it.value();
        if (!jc.is_object()) fail(ErrorKind::ParseError, where + ": expected an object");

        const json& jparents = field(jc, "parents", where);
        if (!jparents.is_array()) fail(ErrorKind::ParseError, where + ".parents: expected an array");
        std::vector<NodeId> parent_order;
        for (const json& p : jparents) {
            if (!p.is_string()) fail(ErrorKind::ParseError, where + ".parents: expected strings");
            parent_order.push_back(lookup(p.get<std::string>(), where + ".parents"));
        }
        if (parent_order != net.dag.parents(v))
            fail(ErrorKind::ValidationError,
                 where + ".parents: order differs from the edge-derived parent list");

        const json& jrows = field(jc, "rows", where);
        if (!jrows.is_array()) fail(ErrorKind::ParseError, where + ".rows: expected an array");
        std::vector<std::vector<double>> rows;
        for (std::size_t r = 0; r < jrows.size(); ++r) {
            const json& jrow = jrows[r];
            if (!jrow.is_array())
                fail(ErrorKind::ParseError, where + ".rows[" + std::to_string(r) +
                                                "]: expected an array");
            std::vector<double> row;
            for (const json& p : jrow) {
                if (!p.is_number())
                    fail(ErrorKind::ParseError, where + ".rows[" + std::to_string(r) +
                                                    "]: expected numbers");
                row.push_back(p.get<double>());
            }
            rows.push_back(std::move(row));
        }
        net.cpts[v] = {v, std::move(parent_order), std::move(rows)};
        have[v] = true;
    }
    for (NodeId v = 0; v < net.var_count(); ++v)
        if (!have[v])
            fail(ErrorKind::ValidationError, "cpts: missing table for " + net.var(v).name);

    const ValidationReport report = validate(net);
    if (!report.ok())
        fail(ErrorKind::ValidationError,
             report.errors.front().where + ": " + report.errors.front().message +
                 (report.errors.size() > 1
                      ? " (+" + std::to_string(report.errors.size() - 1) + " more)"
                      : ""));
    return net;
}

NetworkModel load_network(const std::string& path) {
    return parse_network(read_file(path));
}

std::string serialize_network(const NetworkModel& net) {
    std::string out;
    out += "{\n  \"variables\": [\n";
    for (NodeId v = 0; v < net.var_count(); ++v) {
        const Variable& var = net.var(v);
        out += "    {\"name\": ";
        escape_to(out, var.name);
        out += ", \"states\": [";
        for (int s = 0; s < var.card(); ++s) {
            if (s) out += ", ";
            escape_to(out, var.states[s]);
        }
        out += "], \"observed\": ";
        out += var.kind == VarKind::Observed ? "true" : "false";
        out += v + 1 < net.var_count() ? "},\n" : "}\n";
    }
    out += "  ],\n  \"edges\": [\n";
    const auto& edges = net.dag.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        out += "    [";
        escape_to(out, net.var(edges[i].first).name);
        out += ", ";
        escape_to(out, net.var(edges[i].second).name);
        out += i + 1 < edges.size() ? "],\n" : "]\n";
    }
    out += "  ],\n  \"cpts\": {\n";
    for (NodeId v = 0; v < net.var_count(); ++v) {
        const Cpt& cpt = net.cpts[v];
        out += "    ";
        escape_to(out, net.var(v).name);
        out += ": {\"parents\": [";
        for (std::size_t i = 0; i < cpt.parent_order.size(); ++i) {
            if (i) out += ", ";
            escape_to(out, net.var(cpt.parent_order[i]).name);
        }
        out += "], \"rows\": [\n";
        for (std::size_t r = 0; r < cpt.rows.size(); ++r) {
            out += "      [";
            for (std::size_t s = 0; s < cpt.rows[r].size(); ++s) {
                if (s) out += ", ";
                number_to(out, cpt.rows[r][s]);
            }
            out += r + 1 < cpt.rows.size() ? "],\n" : "]\n";
        }
        out += "    ]}";
        out += v + 1 < net.var_count() ? ",\n" : "\n";
    }
    out += "  }\n}\n";
    return out;
}

Assignment parse_evidence(const std::string& json_text, const NetworkModel& net) {
    const json j = parse_json(json_text);
    if (!j.is_object()) fail(ErrorKind::ParseError, "evidence: expected an object");

    Assignment x(net.var_count());
    for (auto it = j.begin(); it != j.end(); ++it) {
        const NodeId v = net.node_by_name(it.key());
        if (v < 0) fail(ErrorKind::UnknownName, "evidence: unknown variable '" + it.key() + "'");
        if (net.var(v).kind != VarKind::Observed)
            fail(ErrorKind::ValidationError,
                 "evidence: variable '" + it.key() + "' is hidden");
        if (!it.value().is_string())
            fail(ErrorKind::ParseError, "evidence." + it.key() + ": expected a state label");
        const std::string label = it.value().get<std::string>();
        const auto& states = net.var(v).states;
        const auto pos = std::find(states.begin(), states.end(), label);
        if (pos == states.end())
            fail(ErrorKind::UnknownName,
                 "evidence." + it.key() + ": unknown state label '" + label + "'");
        x.set(v, static_cast<int>(pos - states.begin()));
    }
    for (const Variable& v : net.variables)
        if (v.kind == VarKind::Observed && !x.has(v.id))
            fail(ErrorKind::ValidationError, "evidence: missing observed variable " + v.name);
    return x;
}

Assignment load_evidence(const std::string& path, const NetworkModel& net) {
    return parse_evidence(read_file(path), net);
}

std::string serialize_evidence(const NetworkModel& net, const Assignment& x) {
    std::string out = "{";
    bool first = true;
    for (const Variable& v : net.variables) {
        if (!x.has(v.id)) continue;
        if (!first) out += ", ";
        first = false;
        escape_to(out, v.name);
        out += ": ";
        escape_to(out, v.states[x.get(v.id)]);
    }
    out += "}\n";
    return out;
}

} // namespace bnet
