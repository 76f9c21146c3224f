#include "ltimes/workspace.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ltimes {

namespace {

using nlohmann::json;

[[noreturn]] void fail_reference(const std::string& kind, const std::string& name) {
    throw ReferenceError("unresolved " + kind + " name '" + name + "'");
}

Int read_int(const json& v, const std::string& where) {
    if (v.is_number_unsigned())
        return Int(static_cast<unsigned long>(v.get<std::uint64_t>()));
    if (v.is_number_integer())
        return Int(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string())
        return Int(v.get<std::string>());
    throw ValidationError(where + ": expected an integer or a decimal string");
}

unsigned read_unsigned(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key))
        throw ValidationError(where + ": missing field '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_unsigned())
        throw ValidationError(where + ": field '" + key + "' must be a nonnegative integer");
    return v.get<unsigned>();
}

std::string read_string(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.contains(key) || !obj.at(key).is_string())
        throw ValidationError(where + ": missing string field '" + key + "'");
    return obj.at(key).get<std::string>();
}

// Explicit profiles must cover the whole workspace truncation degree:
// shorter data would leave trailing coefficients unknown, and unknown is
// not zero.
BettiSeries read_betti(const json& arr, std::size_t degree, const std::string& where) {
    if (!arr.is_array())
        throw ValidationError(where + ": expected an array of coefficients");
    if (arr.size() < degree + 1)
        throw ValidationError(where + ": has " + std::to_string(arr.size()) +
                              " coefficients, the workspace truncation degree " +
                              std::to_string(degree) + " needs " +
                              std::to_string(degree + 1));
    std::vector<Int> coeffs;
    coeffs.reserve(degree + 1);
    for (std::size_t i = 0; i <= degree; ++i)
        coeffs.push_back(read_int(arr[i], where + "[" + std::to_string(i) + "]"));
    return BettiSeries(std::move(coeffs));
}

LocalRingModel parse_ring(const std::string& name, const json& desc, std::size_t degree) {
    const std::string where = "ring '" + name + "'";
    const std::string kind = read_string(desc, "kind", where);
    if (kind == "regular")
        return regular_ring(read_unsigned(desc, "dim", where), degree).renamed(name);
    if (kind == "hypersurface")
        return hypersurface_ring(read_unsigned(desc, "edim", where), degree).renamed(name);
    if (kind == "complete_intersection")
        return complete_intersection_ring(read_unsigned(desc, "edim", where),
                                          read_unsigned(desc, "codim", where), degree)
            .renamed(name);
    if (kind == "explicit") {
        if (!desc.contains("betti_k"))
            throw ValidationError(where + ": missing field 'betti_k'");
        unsigned characteristic =
            desc.contains("characteristic") ? read_unsigned(desc, "characteristic", where) : 0;
        return explicit_ring(name, read_unsigned(desc, "dim", where),
                             read_unsigned(desc, "depth", where),
                             read_unsigned(desc, "edim", where),
                             read_betti(desc.at("betti_k"), degree, where + ".betti_k"),
                             characteristic);
    }
    throw ValidationError(where + ": unknown kind '" + kind + "'");
}

ModuleFlags parse_flags(const json& desc, const std::string& where) {
    ModuleFlags flags;
    if (!desc.contains("flags")) return flags;
    const json& f = desc.at("flags");
    if (!f.is_object())
        throw ValidationError(where + ": 'flags' must be an object");
    for (const auto& [key, value] : f.items()) {
        if (key == "canonical")
            flags.canonical_module = value.get<bool>();
        else if (key == "finite_length")
            flags.finite_length = value.get<bool>();
        else if (key == "finite_pd")
            flags.finite_pd = value.get<bool>();
        else if (key == "free_of_rank")
            flags.free_of_rank = value.get<unsigned>();
        else
            throw ValidationError(where + ": unknown flag '" + key + "'");
    }
    return flags;
}

ModuleModel parse_module(const std::string& name, const json& desc,
                         const std::map<std::string, LocalRingModel>& rings,
                         std::size_t degree) {
    const std::string where = "module '" + name + "'";
    const std::string kind = read_string(desc, "kind", where);
    const std::string over_name = read_string(desc, "over", where);
    auto over = rings.find(over_name);
    if (over == rings.end())
        fail_reference("ring", over_name);

    if (kind == "free")
        return free_module(read_unsigned(desc, "rank", where), over->second, degree,
                           parse_flags(desc, where))
            .renamed(name);
    if (kind == "residue_field")
        return residue_field(over->second, degree).renamed(name);
    if (kind == "explicit") {
        if (!desc.contains("betti"))
            throw ValidationError(where + ": missing field 'betti'");
        return explicit_module(name, over->second,
                               read_betti(desc.at("betti"), degree, where + ".betti"),
                               read_unsigned(desc, "depth", where),
                               parse_flags(desc, where));
    }
    throw ValidationError(where + ": unknown kind '" + kind + "'");
}

} // namespace

const LocalRingModel& WorkspaceDocument::ring(const std::string& name) const {
    auto it = rings.find(name);
    if (it == rings.end())
        fail_reference("ring", name);
    return it->second;
}

const ModuleModel& WorkspaceDocument::module_named(const std::string& name) const {
    auto it = modules.find(name);
    if (it == modules.end())
        fail_reference("module", name);
    return it->second;
}

const WorkspaceDocument::IdealizationDecl&
WorkspaceDocument::idealization(const std::string& name) const {
    auto it = idealizations.find(name);
    if (it == idealizations.end())
        fail_reference("idealization", name);
    return it->second;
}

IdealizationRing WorkspaceDocument::build_idealization(const std::string& name) const {
    const IdealizationDecl& decl = idealization(name);
    return idealize(ring(decl.base), module_named(decl.module), truncation_degree);
}

WorkspaceDocument parse_workspace_text(const std::string& text, const std::string& origin) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
    if (!doc.is_object())
        throw ParseError(origin + ": top level must be a JSON object");

    WorkspaceDocument ws;
    if (doc.contains("truncation_degree")) {
        const json& d = doc.at("truncation_degree");
        if (!d.is_number_unsigned())
            throw ValidationError("truncation_degree must be a nonnegative integer");
        ws.truncation_degree = d.get<std::size_t>();
    }

    if (doc.contains("rings"))
        for (const auto& [name, desc] : doc.at("rings").items())
            ws.rings.emplace(name, parse_ring(name, desc, ws.truncation_degree));

    if (doc.contains("modules"))
        for (const auto& [name, desc] : doc.at("modules").items())
            ws.modules.emplace(name,
                               parse_module(name, desc, ws.rings, ws.truncation_degree));

    if (doc.contains("idealizations"))
        for (const auto& [name, desc] : doc.at("idealizations").items()) {
            const std::string where = "idealization '" + name + "'";
            WorkspaceDocument::IdealizationDecl decl{read_string(desc, "base", where),
                                                     read_string(desc, "module", where)};
            if (!ws.rings.contains(decl.base))
                fail_reference("ring", decl.base);
            const auto mod = ws.modules.find(decl.module);
            if (mod == ws.modules.end())
                fail_reference("module", decl.module);
            if (mod->second.over() != decl.base)
                throw ValidationError(where + ": module '" + decl.module + "' is over '" +
                                      mod->second.over() + "', not '" + decl.base + "'");
            ws.idealizations.emplace(name, std::move(decl));
        }

    return ws;
}

WorkspaceDocument parse_workspace(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open workspace file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_workspace_text(buf.str(), path.string());
}

} // namespace ltimes
