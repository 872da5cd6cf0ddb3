#include "pgca/report.hpp"

namespace pgca {

Report &Report::param(std::string key, std::string value)
{
    params.emplace_back(std::move(key), std::move(value));
    return *this;
}

Report &Report::dimension(std::string key, std::int64_t value)
{
    dimensions.emplace_back(std::move(key), value);
    return *this;
}

Report &Report::basis(std::string key, std::vector<std::string> members)
{
    bases.emplace_back(std::move(key), std::move(members));
    return *this;
}

Report &Report::fact(std::string key, std::string value)
{
    facts.emplace_back(std::move(key), std::move(value));
    return *this;
}

Report &Report::fail(const Error &e)
{
    pass = false;
    error = Failure{std::string(e.code_name()), e.what(), e.subject()};
    return *this;
}

std::optional<std::int64_t> Report::find_dimension(const std::string &key) const
{
    for (const auto &[k, v] : dimensions)
        if (k == key)
            return v;
    return std::nullopt;
}

std::optional<std::string> Report::find_fact(const std::string &key) const
{
    for (const auto &[k, v] : facts)
        if (k == key)
            return v;
    return std::nullopt;
}

} // namespace pgca
