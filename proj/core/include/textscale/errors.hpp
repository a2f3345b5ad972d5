#pragma once

#include <stdexcept>
#include <string>

namespace textscale {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class PathNotFound : public Error {
public:
    explicit PathNotFound(const std::string& path) : Error("path not found: " + path) {}
};

class DuplicateCategory : public Error {
public:
    explicit DuplicateCategory(const std::string& name)
        : Error("duplicate category name: " + name) {}
};

class ManifestParseError : public Error {
public:
    explicit ManifestParseError(const std::string& msg) : Error("manifest: " + msg) {}
};

class EmptyDocument : public Error {
public:
    explicit EmptyDocument(const std::string& source)
        : Error("document produced zero tokens: " + source) {}
};

class EmptyCategory : public Error {
public:
    explicit EmptyCategory(const std::string& name) : Error("category is empty: " + name) {}
};

class TooFewSegments : public Error {
public:
    TooFewSegments(std::size_t n_tokens, std::size_t segment_size)
        : Error("need at least 2 full segments: " + std::to_string(n_tokens) +
                " tokens at segment size " + std::to_string(segment_size)) {}
};

class FewerThanTwoPoints : public Error {
public:
    explicit FewerThanTwoPoints(std::size_t n)
        : Error("regression needs >= 2 points, got " + std::to_string(n)) {}
};

class NonPositiveCoordinate : public Error {
public:
    NonPositiveCoordinate(double x, double y)
        : Error("log-log fit requires strictly positive coordinates, got (" +
                std::to_string(x) + ", " + std::to_string(y) + ")") {}
};

class UndefinedForSingletonVocabulary : public Error {
public:
    UndefinedForSingletonVocabulary()
        : Error("normalized entropy undefined for a single-type vocabulary") {}
};

} // namespace textscale
