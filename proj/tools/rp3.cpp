#include <CLI11.hpp>

#include <iostream>
#include <variant>

#include "acceptance_suite.hpp"
#include "rp3/bracket.hpp"
#include "rp3/io.hpp"
#include "rp3/khovanov.hpp"
#include "rp3/moves.hpp"
#include "rp3/projective.hpp"

using namespace rp3;

namespace {

enum Exit { kOk = 0, kViolation = 1, kBadInput = 2, kUnsupported = 3 };

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::string input;
    std::string format;
    std::uint64_t seed = 1;
    int steps = 10;
    int threads = 1;
    std::string substitute;
    bool rows = false;
};

using Loaded = std::variant<ProjectiveDiagram, VirtualDiagram>;

Loaded load(const Args& a) {
    if (a.input.empty()) throw BadInput("no input file");
    std::string fmt = a.format;
    if (fmt.empty()) fmt = a.input.ends_with(".vpd") ? "vpd" : "pkd";
    std::string text = read_file(a.input);
    if (fmt == "vpd") return parse_virtual(text);
    if (fmt == "pkd") return parse_projective(text);
    throw BadInput("unknown format '" + fmt + "'");
}

ProjectiveDiagram need_projective(const Loaded& l, const std::string& cmd) {
    if (auto p = std::get_if<ProjectiveDiagram>(&l)) return *p;
    throw BadInput(cmd + " needs a projective (pkd) diagram");
}

// Virtual model of the input: pi for projective diagrams.
VirtualDiagram model(const Loaded& l) {
    if (auto p = std::get_if<ProjectiveDiagram>(&l)) return orient(pi(orient(*p)));
    return orient(std::get<VirtualDiagram>(l));
}

void print_betti(const BettiTable& b, bool rows) { std::cout << (rows ? b.rows() : b.grid()); }

int run(const std::string& cmd, const Args& a) {
    if (cmd == "selftest") {
        acceptance::Options opt;
        opt.seed = a.seed;
        opt.threads = a.threads;
        std::cout << "base seed " << opt.seed << "\n";
        return acceptance::print_table(acceptance::run_all(opt), std::cout) ? kViolation : kOk;
    }
    Loaded l = load(a);
    if (cmd == "validate") {
        // parsing already validated; report the shape
        auto v = model(l);
        std::cout << "ok " << (std::holds_alternative<ProjectiveDiagram>(l) ? "projective" : "virtual") << " crossings "
                  << v.crossings.size() << " components " << component_count(v) << "\n";
        return kOk;
    }
    if (cmd == "class") {
        std::cout << homotopy_class(need_projective(l, cmd)) << "\n";
        return kOk;
    }
    if (cmd == "pi") {
        std::cout << serialize(pi(orient(need_projective(l, cmd))));
        return kOk;
    }
    if (cmd == "bracket") {
        auto v = model(l);
        std::cout << "bracket " << kauffman_bracket(v, a.threads).str() << "\n";
        std::cout << "f " << normalized_bracket(v, a.threads).str() << "\n";
        return kOk;
    }
    if (cmd == "jones") {
        Laurent f = normalized_bracket(model(l), a.threads);
        if (a.substitute == "t") std::cout << "V " << f.jones_str() << "\n";
        else if (a.substitute.empty()) std::cout << "f " << f.str() << "\n";
        else throw BadInput("--substitute accepts only 't'");
        return kOk;
    }
    if (cmd == "nonaffine") {
        auto w = non_affine_obstruction(normalized_bracket(model(l), a.threads));
        if (w) std::cout << "NON-AFFINE (witness exponent " << *w << ")\n";
        else std::cout << "NO OBSTRUCTION (every exponent divisible by 4)\n";
        return kOk;
    }
    if (cmd == "cover") {
        auto p = orient(need_projective(l, cmd));
        auto c = double_cover(p);
        std::cout << serialize(c);
        std::cout << "components " << component_count(c) << "\n";
        try {
            std::cout << "linking " << lift_linking_number(p) << "\n";
        } catch (const NotApplicable& e) {
            std::cout << "linking n/a (" << e.what() << ")\n";
        }
        return kOk;
    }
    if (cmd == "khovanov") {
        print_betti(khovanov_betti(model(l), {}, a.threads), a.rows);
        return kOk;
    }
    if (cmd == "marked") {
        auto m = marked_betti(orient(need_projective(l, cmd)), a.threads);
        print_betti(m.table, a.rows);
        std::cout << "max marked circles per state " << m.max_marked_per_state << "\n";
        return kOk;
    }
    if (cmd == "lee") {
        auto r = lee_homology(model(l), a.threads);
        std::cout << "total " << r.total << "\n";
        for (auto [i, dim] : r.by_degree) std::cout << "degree " << i << " " << dim << "\n";
        for (auto [k, dim] : r.filtration) std::cout << "filtration " << k << " " << dim << "\n";
        return kOk;
    }
    if (cmd == "rasmussen") {
        std::cout << "s = " << rasmussen_s(model(l), a.threads) << "\n";
        return kOk;
    }
    if (cmd == "genus") {
        auto g = seifert_genus_data(model(l));
        auto value = [&] {
            int t = g.twice_genus();
            return t % 2 ? std::to_string(t) + "/2" : std::to_string(t / 2);
        };
        if (g.positive) {
            std::cout << "g = " << value() << "\n";
        } else {
            std::cout << "(" << g.crossings << "+1-" << g.seifert_circuits << ")/2 = " << value() << "\n";
            std::cerr << "warning: the diagram is not positive, so this value is not a genus\n";
        }
        return kOk;
    }
    if (cmd == "walk") {
        if (auto p = std::get_if<ProjectiveDiagram>(&l)) {
            auto w = random_walk(orient(*p), a.steps, a.seed);
            for (const auto& m : w.trace) std::cout << m.str() << "\n";
            std::cout << "result\n" << serialize(w.diagram);
        } else {
            auto w = random_walk(orient(std::get<VirtualDiagram>(l)), a.steps, a.seed);
            for (const auto& m : w.trace) std::cout << m.str() << "\n";
            std::cout << "result\n" << serialize(w.diagram);
        }
        return kOk;
    }
    throw BadInput("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants of links in projective 3-space via virtual knot models"};
    app.require_subcommand(1);
    Args a;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"validate", "parse and validate a diagram"},
        {"class", "homotopy class (0 or 1)"},
        {"pi", "virtual diagram associated with a projective diagram"},
        {"bracket", "Kauffman bracket and normalized bracket f"},
        {"jones", "normalized bracket, optionally in t"},
        {"nonaffine", "affineness obstruction from f"},
        {"cover", "canonical double cover and its linking number"},
        {"khovanov", "Khovanov cohomology table"},
        {"marked", "Khovanov table with marked circles"},
        {"lee", "Lee homology and its filtration"},
        {"rasmussen", "Rasmussen invariant s"},
        {"genus", "(C+1-S)/2 for positive diagrams"},
        {"walk", "random move walk with its trace"},
        {"selftest", "acceptance suite"},
    };
    std::string chosen;
    for (const auto& [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        if (name != "selftest") {
            sub->add_option("file", a.input, "diagram file");
            sub->add_option("--input", a.input, "diagram file");
            sub->add_option("--format", a.format, "pkd or vpd")->check(CLI::IsMember({"pkd", "vpd"}));
        }
        sub->add_option("--seed", a.seed, "random seed");
        sub->add_option("--steps", a.steps, "walk length")->check(CLI::NonNegativeNumber);
        sub->add_option("--threads", a.threads, "worker cap")->check(CLI::PositiveNumber);
        sub->add_option("--substitute", a.substitute, "print in the variable t (A = t^(-1/4))");
        sub->add_flag("--rows", a.rows, "Betti rows 'i j dim' instead of a grid");
        sub->callback([&chosen, name = name] { chosen = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kBadInput;
    }
    try {
        return run(chosen, a);
    } catch (const ParseError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const BadInput& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const DiagramError& e) {
        std::cerr << "bad input: " << e.what() << "\n";
        return kBadInput;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const NotApplicable& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kUnsupported;
    } catch (const std::logic_error& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kViolation;
    }
}
