#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace textscale {

enum class LabelClass { legal, general, generated, other };

std::string to_string(LabelClass label);
LabelClass label_class_from_string(const std::string& s);

struct Category {
    std::string name;
    std::vector<std::filesystem::path> paths; // files or directories, resolved absolute
    LabelClass label = LabelClass::other;
};

struct CorpusManifest {
    std::vector<Category> categories;
};

// Loads a JSON manifest:
//   {"categories": [{"name": "...", "label_class": "legal|general|generated|other",
//                    "paths": ["file-or-dir", ...]}, ...]}
// Relative paths resolve against the manifest's directory. Every referenced
// path must exist; category names must be unique; at least one category.
CorpusManifest load_manifest(const std::filesystem::path& manifest_path);

// Expands a category's paths to the ordered list of regular files: file
// entries in manifest order, directory entries walked recursively in
// lexicographic order so runs are deterministic.
std::vector<std::filesystem::path> category_files(const Category& category);

} // namespace textscale
