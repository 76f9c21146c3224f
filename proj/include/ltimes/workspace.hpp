#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "ltimes/idealize.hpp"

namespace ltimes {

/// A parsed and validated workspace: named rings, named modules over them,
/// and named idealization declarations, all built at one shared truncation
/// degree. Every cross-reference is resolved at parse time.
struct WorkspaceDocument {
    struct IdealizationDecl {
        std::string base;
        std::string module;
    };

    std::size_t truncation_degree = 24;
    std::map<std::string, LocalRingModel> rings;
    std::map<std::string, ModuleModel> modules;
    std::map<std::string, IdealizationDecl> idealizations;

    const LocalRingModel& ring(const std::string& name) const;
    const ModuleModel& module_named(const std::string& name) const;
    const IdealizationDecl& idealization(const std::string& name) const;

    /// Idealize the named declaration at the workspace truncation degree.
    IdealizationRing build_idealization(const std::string& name) const;
};

/// Parse a workspace from a JSON document string. The origin string is used
/// in error messages only.
WorkspaceDocument parse_workspace_text(const std::string& text,
                                       const std::string& origin = "<string>");

/// Parse a workspace from a file.
WorkspaceDocument parse_workspace(const std::filesystem::path& path);

} // namespace ltimes
