#include <CLI11.hpp>

#include "trisect/invariants.hpp"
#include "trisect/moves.hpp"
#include "trisect/search.hpp"
#include "trisect/svg.hpp"
#include "trisect/trid.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace trisect;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << text;
}

std::string factors_string(const SNFResult& snf) {
    // Cokernel shape: Z^zeros plus Z/d for each nontrivial factor.
    std::ostringstream out;
    bool first = true;
    int free_rank = snf.zero_count();
    if (free_rank > 0) {
        out << "Z";
        if (free_rank > 1) out << "^" << free_rank;
        first = false;
    }
    for (long long d : snf.diagonal)
        if (d > 1) {
            if (!first) out << " + ";
            out << "Z/" << d;
            first = false;
        }
    if (first) out << "0";
    return out.str();
}

std::string diagonal_string(const SNFResult& snf) {
    std::ostringstream out;
    out << "(";
    for (size_t i = 0; i < snf.diagonal.size(); ++i)
        out << (i ? "," : "") << snf.diagonal[i];
    out << ")";
    return out.str();
}

SearchBudget make_budget(int bands, int transitions, int depth, long long states, int threads) {
    SearchBudget b;
    b.band_events = bands;
    b.face_transitions = transitions;
    b.max_depth = depth;
    b.max_states = states;
    b.threads = threads;
    return b;
}

Progress progress_printer(bool enabled) {
    if (!enabled) return nullptr;
    auto start = std::chrono::steady_clock::now();
    return [start](const SearchStats& st) {
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cerr << "progress: depth=" << st.depth_reached << " visited=" << st.states_visited
                  << " generated=" << st.states_generated << " states/s="
                  << (dt > 0 ? (long long)(st.states_visited / dt) : 0) << "\n";
    };
}

std::string move_string(const Move& mv) {
    std::ostringstream out;
    out << mv.family << " " << (mv.i + 1) << " over " << (mv.j + 1) << " band["
        << mv.band.to_spec() << "]";
    return out.str();
}

int cmd_validate(const std::string& file) {
    auto d = parse_trid(read_file(file));
    if (auto* tri = std::get_if<TrisectionDiagram>(&d)) {
        auto rep = validate_trisection(*tri);
        if (!rep.pass) {
            std::cerr << "error: validation failed: " << rep.message << "\n";
            return 2;
        }
        std::cout << "PASS g=" << tri->genus() << " k=(" << rep.computed.k1 << ","
                  << rep.computed.k2 << "," << rep.computed.k3 << ") tiers=("
                  << tier_name(rep.pairs[0].tier) << "," << tier_name(rep.pairs[1].tier) << ","
                  << tier_name(rep.pairs[2].tier) << ")\n";
        return 0;
    }
    auto& h = std::get<HeegaardDiagram>(d);
    for (const auto& fam : {h.first, h.second}) {
        auto rep = validate_cut_system(h.arrangement, fam);
        if (!rep.pass) {
            std::cerr << "error: validation failed: " << rep.message << "\n";
            return 2;
        }
    }
    auto pc = classify_pair(h);
    std::cout << "PASS g=" << h.arrangement.genus() << " k=" << pc.k
              << " tier=" << tier_name(pc.tier) << "\n";
    return 0;
}

int cmd_invariants(const std::string& file) {
    auto parsed = parse_trid(read_file(file));
    if (auto* h = std::get_if<HeegaardDiagram>(&parsed)) {
        auto hp = h1_pair(*h);
        std::cout << "g=" << h->arrangement.genus() << "\n";
        std::cout << "H1(pair)=" << diagonal_string(hp.snf) << " k_alg=" << hp.k_alg
                  << (hp.incompatible ? " INCOMPATIBLE" : "") << "\n";
        return 0;
    }
    auto& d = std::get<TrisectionDiagram>(parsed);
    auto rep = validate_trisection(d);
    if (!rep.pass) {
        std::cerr << "error: invalid diagram: " << rep.message << "\n";
        return 2;
    }
    std::cout << "g=" << d.genus() << "\n";
    std::cout << "k=(" << rep.computed.k1 << "," << rep.computed.k2 << "," << rep.computed.k3
              << ") tiers=(" << tier_name(rep.pairs[0].tier) << ","
              << tier_name(rep.pairs[1].tier) << "," << tier_name(rep.pairs[2].tier) << ")\n";
    std::cout << "chi=" << euler_characteristic(rep.computed) << "\n";
    static const char* pair_names[3] = {"alpha,beta", "alpha,gamma", "beta,gamma"};
    for (int p = 0; p < 3; ++p)
        std::cout << "H1(" << pair_names[p]
                  << ")=" << diagonal_string(rep.pairs[p].homology.snf) << "\n";
    std::cout << "H1(X)=" << factors_string(h1_four_manifold(d)) << "\n";
    auto pi = pi1_trisection(d);
    std::cout << "pi1=" << pi.raw.to_string() << "\n";
    std::cout << "pi1_simplified=" << pi.simplified.presentation.to_string()
              << (pi.simplified.visibly_trivial ? " (visibly trivial)" : " (triviality unknown)")
              << "\n";
    return 0;
}

int cmd_standardize(const std::string& file, const SearchBudget& budget, bool show_progress) {
    auto d = parse_trisection(read_file(file));
    auto srep = validate_trisection_structure(d);
    if (!srep.pass) {
        std::cerr << "error: invalid diagram: " << srep.message << "\n";
        return 2;
    }
    auto out = standardize(d, budget, progress_printer(show_progress));
    std::cout << "status=" << (out.search.status == SearchStatus::Found
                                   ? "FOUND"
                                   : (out.search.status == SearchStatus::Exhausted ? "EXHAUSTED"
                                                                                   : "CAPPED"))
              << " visited=" << out.search.stats.states_visited
              << " generated=" << out.search.stats.states_generated
              << " depth=" << out.search.stats.depth_reached << "\n";
    if (out.search.status != SearchStatus::Found) return 1;
    std::cout << "parameters=(" << out.standard->params.g << "," << out.standard->params.k1 << ","
              << out.standard->params.k2 << "," << out.standard->params.k3 << ")\n";
    std::cout << "witness_length=" << out.search.witness.size() << "\n";
    for (const auto& mv : out.search.witness) std::cout << "move " << move_string(mv) << "\n";
    auto summands = detect_standard_summands(*out.diagram);
    std::cout << "summands=";
    for (size_t i = 0; i < summands.size(); ++i) std::cout << (i ? "+" : "") << summands[i];
    if (summands.empty()) std::cout << "(none)";
    std::cout << "\n";
    std::cout << serialize(*out.diagram);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"trisection and Heegaard diagram toolkit"};
    app.require_subcommand(1);

    std::string file, file_b, output, band_spec, family, name;
    int opt_i = 0, opt_j = 0, opt_n = 0, kind = 1;
    uint64_t seed = 0;
    int bands = 2, transitions = 6, depth = 6, threads = 1;
    long long states = 1'000'000;
    bool show_progress = false;

    auto* validate = app.add_subcommand("validate", "check a diagram file");
    validate->add_option("file", file)->required();

    auto* invariants = app.add_subcommand("invariants", "print invariants of a diagram");
    invariants->add_option("file", file)->required();

    auto* standardize_cmd = app.add_subcommand("standardize", "search for a standard form");
    standardize_cmd->add_option("file", file)->required();
    standardize_cmd->add_option("--bands", bands, "max band boundary events");
    standardize_cmd->add_option("--transitions", transitions, "max band face transitions");
    standardize_cmd->add_option("--depth", depth, "max slide depth");
    standardize_cmd->add_option("--states", states, "max visited states");
    standardize_cmd->add_option("--threads", threads, "worker threads (deterministic)");
    standardize_cmd->add_flag("--progress", show_progress, "report search progress on stderr");

    auto* slide_cmd = app.add_subcommand("slide", "apply one handle slide");
    slide_cmd->add_option("file", file)->required();
    slide_cmd->add_option("--family", family)->required();
    slide_cmd->add_option("--i", opt_i, "curve to slide (1-based)")->required();
    slide_cmd->add_option("--j", opt_j, "curve to slide over (1-based)")->required();
    slide_cmd->add_option("--band", band_spec)->required();
    slide_cmd->add_option("-o,--output", output);

    auto* stab = app.add_subcommand("stabilize", "connect-sum a genus-1 standard piece");
    stab->add_option("file", file)->required();
    stab->add_option("--i", kind, "stabilization kind 1|2|3")->required();
    stab->add_option("-o,--output", output);

    auto* connsum = app.add_subcommand("connsum", "connect sum of two diagrams");
    connsum->add_option("a", file)->required();
    connsum->add_option("b", file_b)->required();
    connsum->add_option("-o,--output", output);

    auto* catalog_cmd = app.add_subcommand("catalog", "emit a built-in diagram");
    catalog_cmd->add_option("name", name, "S0|S100|S010|S001|CP2+|CP2-|S1xS3|Sk(k1,k2,k3)")
        ->required();
    catalog_cmd->add_option("-o,--output", output);

    auto* scramble_cmd = app.add_subcommand("scramble", "apply random slides");
    scramble_cmd->add_option("file", file)->required();
    scramble_cmd->add_option("--n", opt_n)->required();
    scramble_cmd->add_option("--seed", seed)->required();
    scramble_cmd->add_option("--bands", bands);
    scramble_cmd->add_option("--transitions", transitions);
    scramble_cmd->add_option("-o,--output", output);

    auto* svg_cmd = app.add_subcommand("svg", "render a diagram to SVG");
    svg_cmd->add_option("file", file)->required();
    svg_cmd->add_option("-o,--output", output)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (invariants->parsed()) return cmd_invariants(file);
        if (standardize_cmd->parsed())
            return cmd_standardize(file, make_budget(bands, transitions, depth, states, threads),
                                   show_progress);
        if (slide_cmd->parsed()) {
            auto d = parse_trisection(read_file(file));
            auto band = BandArc::from_spec(band_spec, d.arrangement.surface());
            auto res = slide(d.arrangement, family, opt_i - 1, opt_j - 1, band);
            write_output(output, serialize(res));
            return 0;
        }
        if (stab->parsed()) {
            auto d = parse_trisection(read_file(file));
            write_output(output, serialize(stabilize(d, kind)));
            return 0;
        }
        if (connsum->parsed()) {
            auto a = parse_trisection(read_file(file));
            auto b = parse_trisection(read_file(file_b));
            write_output(output, serialize(connect_sum(a, b)));
            return 0;
        }
        if (catalog_cmd->parsed()) {
            write_output(output, serialize(catalog(name)));
            return 0;
        }
        if (scramble_cmd->parsed()) {
            auto d = parse_trisection(read_file(file));
            SearchBudget b;
            b.band_events = bands;
            b.face_transitions = transitions;
            auto r = scramble(d, opt_n, seed, b);
            for (const auto& mv : r.log) std::cerr << "move " << move_string(mv) << "\n";
            write_output(output, serialize(r.diagram));
            return 0;
        }
        if (svg_cmd->parsed()) {
            auto parsed = parse_trid(read_file(file));
            const Arrangement& arr = std::holds_alternative<TrisectionDiagram>(parsed)
                                         ? std::get<TrisectionDiagram>(parsed).arrangement
                                         : std::get<HeegaardDiagram>(parsed).arrangement;
            write_output(output, render_svg(arr));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
