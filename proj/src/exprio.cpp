#include "pgca/exprio.hpp"

#include "pgca/error.hpp"
#include "pgca/twolocal.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <set>

namespace pgca {

ParseError::ParseError(ErrorCode code, const std::string &message, std::size_t offset,
                       std::vector<std::string> expected)
    : Error(code, message + " at offset " + std::to_string(offset), std::to_string(offset)), offset_(offset),
      expected_(std::move(expected))
{
}

std::string_view error_code_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByZero:
        return "DivisionByZero";
    case ErrorCode::BasisMismatch:
        return "BasisMismatch";
    case ErrorCode::OutOfWindow:
        return "OutOfWindow";
    case ErrorCode::WindowTooSmall:
        return "WindowTooSmall";
    case ErrorCode::InfeasibleWitness:
        return "InfeasibleWitness";
    case ErrorCode::MissingAnchor:
        return "MissingAnchor";
    case ErrorCode::NotInSpan:
        return "NotInSpan";
    case ErrorCode::TableMismatch:
        return "TableMismatch";
    case ErrorCode::ReplayFailed:
        return "ReplayFailed";
    case ErrorCode::ProbeSetTooSmall:
        return "ProbeSetTooSmall";
    case ErrorCode::ParseError:
        return "ParseError";
    case ErrorCode::BasisMixError:
        return "BasisMixError";
    case ErrorCode::SchemaError:
        return "SchemaError";
    }
    return "Unknown";
}

namespace {

class Parser {
  public:
    explicit Parser(std::string_view s) : s_(s) {}

    Element element()
    {
        skip();
        Element out(Basis::Plain);
        bool negate = accept('-');
        add(out, term(), negate);
        for (;;) {
            skip();
            if (accept('+'))
                add(out, term(), false);
            else if (accept('-'))
                add(out, term(), true);
            else
                break;
        }
        skip();
        if (pos_ != s_.size())
            fail("unexpected character", {"'+'", "'-'", "end of input"});
        if (out.is_zero() && seen_basis_)
            return Element(*seen_basis_);
        return out;
    }

    GaussianRational scalar_only()
    {
        skip();
        GaussianRational c = scalar();
        skip();
        if (pos_ != s_.size())
            fail("unexpected character", {"end of input"});
        return c;
    }

  private:
    struct Term {
        GaussianRational coeff;
        std::optional<Generator> gen;
        std::size_t offset;
    };

    [[noreturn]] void fail(const std::string &what, std::vector<std::string> expected) const
    {
        throw ParseError(ErrorCode::ParseError, what, pos_, std::move(expected));
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }
    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        skip();
        if (!accept(c))
            fail("unexpected " + describe(), {std::string("'") + c + "'"});
    }

    std::string describe() const
    {
        if (pos_ >= s_.size())
            return "end of input";
        return std::string("'") + s_[pos_] + "'";
    }

    static bool is_family(char c) { return c == 'L' || c == 'H' || c == 'I' || c == 'J'; }

    void add(Element &out, const Term &t, bool negate)
    {
        if (!t.gen)
            return;
        if (seen_basis_ && *seen_basis_ != t.gen->basis)
            throw ParseError(ErrorCode::BasisMixError, "element mixes plain and bold generators", t.offset,
                             {std::string(*seen_basis_ == Basis::Plain ? "plain" : "bold") + " generator"});
        seen_basis_ = t.gen->basis;
        out.add_term(negate ? -t.coeff : t.coeff, *t.gen);
    }

    Term term()
    {
        skip();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && is_family(s_[pos_]))
            return {GaussianRational(1), generator(), start};
        if (pos_ >= s_.size() || !(std::isdigit(static_cast<unsigned char>(s_[pos_])) || peek('-') ||
                                   peek('(') || peek('i')))
            fail("expected a term, found " + describe(), {"scalar", "generator"});
        GaussianRational c = scalar();
        skip();
        if (accept('*')) {
            skip();
            const std::size_t at = pos_;
            if (pos_ >= s_.size() || !is_family(s_[pos_]))
                fail("expected a generator, found " + describe(), {"'L'", "'H'", "'I'", "'J'"});
            return {c, generator(), at};
        }
        if (!c.is_zero())
            fail("a scalar term must be followed by '*' and a generator", {"'*'"});
        return {c, std::nullopt, start};
    }

    Generator generator()
    {
        Generator g;
        switch (s_[pos_]) {
        case 'L':
            g.family = Family::L;
            break;
        case 'H':
            g.family = Family::H;
            break;
        case 'I':
            g.family = Family::I;
            break;
        default:
            g.family = Family::J;
            break;
        }
        ++pos_;
        g.basis = accept('b') ? Basis::Bold : Basis::Plain;
        expect('[');
        skip();
        g.degree = integer();
        expect(']');
        return g;
    }

    std::int64_t integer()
    {
        const std::size_t start = pos_;
        accept('-');
        std::string_view digits = digit_run();
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + start + (pos_ - start), v);
        if (ec != std::errc() || digits.empty()) {
            pos_ = start;
            fail("degree is not a representable integer", {"integer"});
        }
        (void)ptr;
        return v;
    }

    std::string_view digit_run()
    {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected a digit, found " + describe(), {"digit"});
        return s_.substr(start, pos_ - start);
    }

    Rational rational()
    {
        skip();
        bool negative = accept('-');
        skip();
        Rational num(std::string(digit_run()), 10);
        skip();
        if (accept('/')) {
            skip();
            const std::size_t at = pos_;
            Rational den(std::string(digit_run()), 10);
            if (sgn(den) == 0) {
                pos_ = at;
                fail("zero denominator", {"nonzero digits"});
            }
            num /= den;
        }
        num.canonicalize();
        return negative ? Rational(-num) : num;
    }

    GaussianRational scalar()
    {
        skip();
        if (accept('i'))
            return GaussianRational::imaginary_unit();
        if (!accept('('))
            return GaussianRational(rational());
        Rational first = rational();
        skip();
        GaussianRational out;
        if (accept('i')) {
            out = GaussianRational(0, first);
        } else {
            bool minus = false;
            if (accept('-'))
                minus = true;
            else if (!accept('+'))
                fail("unexpected " + describe() + " in complex literal", {"'+'", "'-'", "'i'"});
            Rational second = rational();
            skip();
            if (!accept('i'))
                fail("complex literal needs an 'i' after the imaginary part", {"'i'"});
            out = GaussianRational(first, minus ? Rational(-second) : second);
        }
        expect(')');
        return out;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::optional<Basis> seen_basis_;
};

std::string generator_text(const Generator &g)
{
    std::string out(1, family_letter(g.family));
    if (g.basis == Basis::Bold)
        out += 'b';
    return out + "[" + std::to_string(g.degree) + "]";
}

} // namespace

Element parse_element(std::string_view text) { return Parser(text).element(); }

GaussianRational parse_scalar(std::string_view text) { return Parser(text).scalar_only(); }

std::string print_scalar(const GaussianRational &c) { return c.to_string(); }

std::string print_element(const Element &x)
{
    if (x.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto &[g, c] : x.terms()) {
        if (c.is_real()) {
            const bool negative = sgn(c.re()) < 0;
            const Rational a = abs(c.re());
            if (first)
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            if (a != 1)
                out += a.get_str() + "*";
        } else {
            if (!first)
                out += " + ";
            out += c.to_string() + "*";
        }
        out += generator_text(g);
        first = false;
    }
    return out;
}

std::string print_derivation(const Derivation &d)
{
    if (d.is_zero())
        return "0";
    std::string out;
    if (!d.inner.is_zero())
        out = "ad(" + print_element(d.inner) + ")";
    if (!d.outer.is_zero()) {
        if (!out.empty())
            out += " + ";
        out += d.outer == GaussianRational(1) ? "D" : d.outer.to_string() + "*D";
    }
    return out;
}

namespace {

std::int64_t integer_field(const Json &doc, const std::string &key, const std::string &path)
{
    const Json &v = doc.at(key);
    if (v.is_number_integer())
        return v.get<std::int64_t>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        std::int64_t out = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        if (ec == std::errc() && ptr == s.data() + s.size())
            return out;
    }
    throw SchemaError(path, "expected an integer");
}

Element element_field(const Json &entry, const std::string &key, const std::string &path)
{
    if (!entry.contains(key))
        throw SchemaError(path, "missing field");
    const Json &v = entry.at(key);
    if (!v.is_string())
        throw SchemaError(path, "expected an element string");
    try {
        return parse_element(v.get<std::string>());
    } catch (const ParseError &e) {
        throw SchemaError(path, e.what());
    }
}

} // namespace

TwoLocalInstance load_instance(const Json &doc)
{
    if (!doc.is_object())
        throw SchemaError("/", "instance document must be an object");
    static const std::set<std::string> known{"window", "interior", "table"};
    for (const auto &[k, v] : doc.items())
        if (!known.count(k))
            throw SchemaError("/" + k, "unknown field");
    if (!doc.contains("window"))
        throw SchemaError("/window", "missing field");
    const std::int64_t radius = integer_field(doc, "window", "/window");
    const std::int64_t interior = doc.contains("interior") ? integer_field(doc, "interior", "/interior") : radius / 2;
    std::optional<Window> window;
    try {
        window.emplace(radius, interior);
    } catch (const Error &e) {
        throw SchemaError(doc.contains("interior") ? "/interior" : "/window", e.what());
    }
    if (!doc.contains("table"))
        throw SchemaError("/table", "missing field");
    const Json &table = doc.at("table");
    if (!table.is_array())
        throw SchemaError("/table", "expected an array");
    std::vector<TwoLocalInstance::Entry> entries;
    for (std::size_t k = 0; k < table.size(); ++k) {
        const std::string base = "/table/" + std::to_string(k);
        const Json &e = table.at(k);
        if (!e.is_object())
            throw SchemaError(base, "expected an object with point and value");
        for (const auto &[key, v] : e.items())
            if (key != "point" && key != "value")
                throw SchemaError(base + "/" + key, "unknown field");
        entries.push_back({element_field(e, "point", base + "/point"), element_field(e, "value", base + "/value")});
    }
    return {*window, std::move(entries)};
}

TwoLocalInstance load_instance_text(std::string_view text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error &e) {
        throw SchemaError("/", std::string("malformed JSON: ") + e.what());
    }
    return load_instance(doc);
}

Json save_instance(const TwoLocalInstance &inst)
{
    Json doc;
    doc["window"] = inst.window().radius();
    doc["interior"] = inst.window().interior();
    Json table = Json::array();
    for (const auto &e : inst.table())
        table.push_back({{"point", print_element(e.point)}, {"value", print_element(e.value)}});
    doc["table"] = std::move(table);
    return doc;
}

Json save_report(const Report &report)
{
    Json doc;
    doc["report"] = report.name;
    doc["pass"] = report.pass;
    Json params = Json::object();
    for (const auto &[k, v] : report.params)
        params[k] = v;
    doc["params"] = std::move(params);
    Json dims = Json::object();
    for (const auto &[k, v] : report.dimensions)
        dims[k] = v;
    doc["dimensions"] = std::move(dims);
    Json bases = Json::object();
    for (const auto &[k, v] : report.bases)
        bases[k] = v;
    doc["bases"] = std::move(bases);
    Json facts = Json::object();
    for (const auto &[k, v] : report.facts)
        facts[k] = v;
    doc["facts"] = std::move(facts);
    if (report.error)
        doc["error"] = {{"code", report.error->code},
                        {"message", report.error->message},
                        {"subject", report.error->subject}};
    else
        doc["error"] = nullptr;
    return doc;
}

Report load_report(const Json &doc)
{
    auto need = [&](const char *key, bool (Json::*is)() const noexcept) -> const Json & {
        if (!doc.contains(key))
            throw SchemaError(std::string("/") + key, "missing field");
        const Json &v = doc.at(key);
        if (!(v.*is)())
            throw SchemaError(std::string("/") + key, "wrong type");
        return v;
    };
    if (!doc.is_object())
        throw SchemaError("/", "report document must be an object");
    Report r;
    r.name = need("report", &Json::is_string).get<std::string>();
    r.pass = need("pass", &Json::is_boolean).get<bool>();
    for (const auto &[k, v] : need("params", &Json::is_object).items()) {
        if (!v.is_string())
            throw SchemaError("/params/" + k, "expected a string");
        r.param(k, v.get<std::string>());
    }
    for (const auto &[k, v] : need("dimensions", &Json::is_object).items()) {
        if (!v.is_number_integer())
            throw SchemaError("/dimensions/" + k, "expected an integer");
        r.dimension(k, v.get<std::int64_t>());
    }
    for (const auto &[k, v] : need("bases", &Json::is_object).items()) {
        if (!v.is_array())
            throw SchemaError("/bases/" + k, "expected an array");
        std::vector<std::string> members;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_string())
                throw SchemaError("/bases/" + k + "/" + std::to_string(i), "expected a string");
            members.push_back(v[i].get<std::string>());
        }
        r.basis(k, std::move(members));
    }
    for (const auto &[k, v] : need("facts", &Json::is_object).items()) {
        if (!v.is_string())
            throw SchemaError("/facts/" + k, "expected a string");
        r.fact(k, v.get<std::string>());
    }
    if (!doc.contains("error"))
        throw SchemaError("/error", "missing field");
    const Json &err = doc.at("error");
    if (!err.is_null()) {
        if (!err.is_object() || !err.contains("code") || !err.contains("message") || !err.contains("subject"))
            throw SchemaError("/error", "expected null or {code, message, subject}");
        r.error = Report::Failure{err.at("code").get<std::string>(), err.at("message").get<std::string>(),
                                  err.at("subject").get<std::string>()};
    }
    return r;
}

} // namespace pgca
