#pragma once

#include "pgca/error.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pgca {

/// Outcome of a replay, solver run, extraction or fuzz campaign.
///
/// Every list keeps insertion order so that serialized reports are
/// byte-stable for identical inputs.
struct Report {
    struct Failure {
        std::string code;
        std::string message;
        std::string subject;

        friend bool operator==(const Failure &, const Failure &) = default;
    };

    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::pair<std::string, std::int64_t>> dimensions;
    std::vector<std::pair<std::string, std::vector<std::string>>> bases;
    std::vector<std::pair<std::string, std::string>> facts;
    std::optional<Failure> error;

    Report &param(std::string key, std::string value);
    Report &dimension(std::string key, std::int64_t value);
    Report &basis(std::string key, std::vector<std::string> members);
    Report &fact(std::string key, std::string value);
    Report &fail(const Error &e);

    std::optional<std::int64_t> find_dimension(const std::string &key) const;
    std::optional<std::string> find_fact(const std::string &key) const;

    friend bool operator==(const Report &, const Report &) = default;
};

} // namespace pgca
