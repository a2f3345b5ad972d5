#include "textscale/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "textscale/errors.hpp"

namespace textscale {

namespace fs = std::filesystem;

std::string to_string(LabelClass label) {
    switch (label) {
    case LabelClass::legal: return "legal";
    case LabelClass::general: return "general";
    case LabelClass::generated: return "generated";
    case LabelClass::other: return "other";
    }
    return "other";
}

LabelClass label_class_from_string(const std::string& s) {
    if (s == "legal") return LabelClass::legal;
    if (s == "general") return LabelClass::general;
    if (s == "generated") return LabelClass::generated;
    if (s == "other") return LabelClass::other;
    throw ManifestParseError("unknown label_class: " + s);
}

CorpusManifest load_manifest(const fs::path& manifest_path) {
    std::ifstream in(manifest_path);
    if (!in) throw PathNotFound(manifest_path.string());

    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ManifestParseError(e.what());
    }

    if (!doc.is_object() || !doc.contains("categories") || !doc["categories"].is_array()) {
        throw ManifestParseError("expected top-level object with a \"categories\" array");
    }

    const fs::path base = fs::absolute(manifest_path).parent_path();
    CorpusManifest manifest;
    std::unordered_set<std::string> seen;

    for (const auto& entry : doc["categories"]) {
        Category category;
        if (!entry.contains("name") || !entry["name"].is_string()) {
            throw ManifestParseError("category missing string \"name\"");
        }
        category.name = entry["name"].get<std::string>();
        if (!seen.insert(category.name).second) throw DuplicateCategory(category.name);

        if (entry.contains("label_class")) {
            category.label = label_class_from_string(entry["label_class"].get<std::string>());
        }

        if (!entry.contains("paths") || !entry["paths"].is_array()) {
            throw ManifestParseError("category \"" + category.name +
                                     "\" missing \"paths\" array");
        }
        for (const auto& p : entry["paths"]) {
            fs::path path = p.get<std::string>();
            if (path.is_relative()) path = base / path;
            path = path.lexically_normal();
            if (!fs::exists(path)) throw PathNotFound(path.string());
            category.paths.push_back(std::move(path));
        }
        manifest.categories.push_back(std::move(category));
    }

    if (manifest.categories.empty()) {
        throw ManifestParseError("manifest must declare at least one category");
    }
    return manifest;
}

std::vector<fs::path> category_files(const Category& category) {
    std::vector<fs::path> files;
    for (const auto& path : category.paths) {
        if (fs::is_directory(path)) {
            std::vector<fs::path> found;
            for (const auto& e : fs::recursive_directory_iterator(path)) {
                if (e.is_regular_file()) found.push_back(e.path());
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (fs::is_regular_file(path)) {
            files.push_back(path);
        } else {
            throw PathNotFound(path.string());
        }
    }
    return files;
}

} // namespace textscale
