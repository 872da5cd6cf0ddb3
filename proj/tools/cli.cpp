#include "cli.hpp"

#include "pgca/algebra.hpp"
#include "pgca/derivation.hpp"
#include "pgca/error.hpp"
#include "pgca/exprio.hpp"
#include "pgca/fuzz.hpp"
#include "pgca/twolocal.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace pgca::cli {

namespace {

struct Options {
    std::string format = "text";
    std::int64_t window = 12;
    std::optional<std::int64_t> interior;

    std::string x, y;
    std::int64_t degree = 0;
    std::string lemma;
    std::optional<std::int64_t> i, p;
    std::optional<std::string> point;
    std::vector<std::int64_t> probes;
    std::string file;
    std::string what;
    std::int64_t samples = 500;
    std::uint64_t seed = 0;
};

Window make_window(const Options &o)
{
    // --interior defaults to half of --window (6 for the default 12).
    return Window(o.window, o.interior.value_or(o.window / 2));
}

bool is_input_error(ErrorCode c)
{
    switch (c) {
    case ErrorCode::ReplayFailed:
    case ErrorCode::ProbeSetTooSmall:
    case ErrorCode::InfeasibleWitness:
    case ErrorCode::NotInSpan:
    case ErrorCode::TableMismatch:
        return false;
    default:
        return true;
    }
}

void print_text(const Report &r, std::ostream &out)
{
    out << r.name << ": " << (r.pass ? "PASS" : "FAIL") << "\n";
    for (const auto &[k, v] : r.params)
        out << "  " << k << " = " << v << "\n";
    for (const auto &[k, v] : r.facts)
        out << "  " << k << ": " << v << "\n";
    for (const auto &[k, v] : r.dimensions)
        out << "  dim " << k << " = " << v << "\n";
    for (const auto &[k, members] : r.bases) {
        out << "  " << k << ":" << (members.empty() ? " {0}" : "") << "\n";
        for (const auto &m : members)
            out << "    " << m << "\n";
    }
    if (r.error) {
        out << "  error: " << r.error->code << ": " << r.error->message << "\n";
        if (!r.error->subject.empty())
            out << "  subject: " << r.error->subject << "\n";
    }
}

void emit(const Report &r, const Options &o, std::ostream &out)
{
    if (o.format == "json")
        out << save_report(r).dump(2) << "\n";
    else
        print_text(r, out);
}

std::string map_text(const LinearMapOnWindow &m)
{
    std::string out;
    for (const auto &[g, img] : m.images) {
        if (!out.empty())
            out += "; ";
        out += print_element(Element(g)) + " -> " + print_element(img);
    }
    return out.empty() ? "0" : out;
}

Report cmd_bracket(const Options &o)
{
    Element x = parse_element(o.x);
    Element y = parse_element(o.y);
    Report r;
    r.name = "bracket";
    r.param("x", print_element(x)).param("y", print_element(y));
    r.fact("result", print_element(bracket(x, y)));
    r.pass = true;
    return r;
}

Report cmd_der_solve(const Options &o)
{
    Window w = make_window(o);
    DerivationSpace s = derivation_space(w, o.degree);
    Report r;
    r.name = "der-solve";
    r.param("window", std::to_string(w.radius()))
        .param("interior", std::to_string(w.interior()))
        .param("degree", std::to_string(o.degree));
    r.dimension("full", static_cast<std::int64_t>(s.basis.size()));
    r.dimension("interior", static_cast<std::int64_t>(s.interior_basis.size()));
    r.dimension("expected", static_cast<std::int64_t>(s.expected_basis.size()));
    r.fact("matches_known_span", s.matches_expected ? "yes" : "no");
    if (o.degree == 0)
        r.fact("contains_D", s.contains_outer ? "yes" : "no");
    std::vector<std::string> known;
    const std::string deg = std::to_string(o.degree);
    for (char f : {'L', 'H', 'I', 'J'})
        known.push_back(std::string("ad(") + f + "[" + deg + "])");
    if (o.degree == 0)
        known.push_back("D");
    r.basis("known_span", known);
    std::vector<std::string> maps;
    for (const auto &m : s.interior_basis)
        maps.push_back(map_text(m));
    r.basis("interior_basis", maps);
    r.pass = s.matches_expected && (o.degree != 0 || s.contains_outer);
    if (!r.pass)
        r.error = Report::Failure{"ReplayFailed", "interior solution space differs from the known span", ""};
    return r;
}

std::optional<std::vector<std::int64_t>> probes_of(const Options &o)
{
    if (o.probes.empty())
        return std::nullopt;
    return o.probes;
}

Report cmd_replay(const Options &o)
{
    Window w = make_window(o);
    auto need_int = [](const std::optional<std::int64_t> &v, const char *flag) {
        if (!v)
            throw std::invalid_argument(std::string("this replay needs ") + flag);
        return *v;
    };
    auto need_x = [&]() {
        if (!o.point)
            throw std::invalid_argument("this replay needs --x");
        return parse_element(*o.point);
    };
    Report r;
    if (o.lemma == "3.1i")
        r = replay_annihilator_of_l(need_int(o.i, "--i"), w);
    else if (o.lemma == "3.1ii")
        r = replay_annihilator_of_i0j0(w);
    else if (o.lemma == "3.2")
        r = replay_vanishing_on_l(need_int(o.i, "--i"), w);
    else if (o.lemma == "3.3")
        r = replay_value_family(need_x(), probes_of(o), w);
    else if (o.lemma == "3.4")
        r = replay_probe_annihilator(need_int(o.p, "--p"), w);
    else if (o.lemma == "3.5")
        r = replay_vanishing_everywhere(need_x(), probes_of(o), w);
    else
        throw std::invalid_argument("unknown --lemma " + o.lemma);
    r.params.insert(r.params.begin(), {"lemma", o.lemma});
    return r;
}

Report cmd_extract(const Options &o)
{
    std::ifstream in(o.file);
    if (!in)
        throw SchemaError("/", "cannot read " + o.file);
    std::stringstream buf;
    buf << in.rdbuf();
    TwoLocalInstance inst = load_instance_text(buf.str());
    Report r;
    r.name = "extract";
    r.param("file", o.file)
        .param("window", std::to_string(inst.window().radius()))
        .param("interior", std::to_string(inst.window().interior()));
    r.dimension("table_points", static_cast<std::int64_t>(inst.table().size()));
    r.fact("homogeneous", validate_homogeneity(inst) ? "yes" : "no");
    try {
        Derivation d = extract_derivation(inst);
        r.fact("inner", print_element(d.inner));
        r.fact("lambda", print_scalar(d.outer));
        r.fact("derivation", print_derivation(d));
        r.pass = true;
    } catch (const Error &e) {
        if (is_input_error(e.code()))
            throw;
        r.fail(e);
    }
    return r;
}

Report cmd_fuzz(const Options &o)
{
    auto target = parse_fuzz_target(o.what);
    if (!target)
        throw std::invalid_argument("--what must be jacobi, isomorphism or leibniz");
    if (o.window < 1 || o.samples < 0)
        throw std::invalid_argument("--window must be positive and --samples non-negative");
    return run_fuzz(*target, o.window, o.samples, o.seed);
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact computations in the planar Galilean conformal algebra", "pgca"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--window", o.window, "Window radius N (degrees in [-N, N])");
    app.add_option("--interior", o.interior, "Interior radius (default: window / 2)");

    auto *bracket_cmd = app.add_subcommand("bracket", "Bracket of two elements");
    bracket_cmd->add_option("x", o.x)->required();
    bracket_cmd->add_option("y", o.y)->required();

    auto *der = app.add_subcommand("der-solve", "Solve for degree-homogeneous derivations on a window");
    der->add_option("--degree", o.degree)->required();

    auto *replay = app.add_subcommand("replay", "Replay one step of the 2-local argument as linear algebra");
    replay->add_option("--lemma", o.lemma)
        ->required()
        ->check(CLI::IsMember({"3.1i", "3.1ii", "3.2", "3.3", "3.4", "3.5"}));
    replay->add_option("--i", o.i, "Index i of L_i");
    replay->add_option("--p", o.p, "Probe index p of L_p + I_2p + J_2p");
    replay->add_option("--x", o.point, "Element under study");
    replay->add_option("--probes", o.probes, "Comma-separated probe indices")->delimiter(',');

    auto *extract = app.add_subcommand("extract", "Extract a derivation from a 2-local table");
    extract->add_option("--file", o.file)->required();

    auto *fuzz_cmd = app.add_subcommand("fuzz", "Seeded property fuzzing");
    fuzz_cmd->add_option("--what", o.what)->required();
    fuzz_cmd->add_option("--samples", o.samples);
    fuzz_cmd->add_option("--seed", o.seed);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kPass;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kPass;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        Report r;
        if (*bracket_cmd) {
            r = cmd_bracket(o);
            if (o.format == "text") {
                out << r.find_fact("result").value() << "\n";
                return kPass;
            }
        } else if (*der) {
            r = cmd_der_solve(o);
        } else if (*replay) {
            r = cmd_replay(o);
        } else if (*extract) {
            r = cmd_extract(o);
        } else {
            r = cmd_fuzz(o);
        }
        emit(r, o, out);
        return r.pass ? kPass : kFailure;
    } catch (const Error &e) {
        Report r;
        r.name = app.get_subcommands().empty() ? "pgca" : app.get_subcommands().front()->get_name();
        r.fail(e);
        emit(r, o, out);
        err << "error: " << e.code_name() << ": " << e.what() << "\n";
        return is_input_error(e.code()) ? kInputError : kFailure;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception &e) {
        err << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}

} // namespace pgca::cli
