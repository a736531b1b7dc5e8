#ifndef ABPER_TOOLS_CLI_HPP
#define ABPER_TOOLS_CLI_HPP

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <abper/abper.hpp>

namespace abper::cli {

enum exit_status : int { ok = 0, input_error = 1, unknown_answer = 2 };

/// A morphism argument names a readable file or is the morphism itself.
inline binary_morphism load_morphism(const std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        std::stringstream buf;
        buf << in.rdbuf();
        return parse_morphism(buf.str());
    }
    return parse_morphism(source);
}

inline std::vector<std::string> read_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error(errc::syntax_error, "cannot read corpus " + path);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

struct settings {
    std::string morphism;
    std::string format;
    std::string output;
    std::string corpus;
    std::uint64_t kmax = 8;
    std::size_t horizon = 100'000;
    std::size_t max_period = 0;     // 0: 4 |f|^2
    std::size_t max_preperiod = 0;  // 0: 4 |f|^2
    std::size_t length = 0;
    std::size_t nmax = 0;
    std::uint64_t k = 1;
    std::uint64_t t = 1;
    std::uint64_t d = 1;
    std::size_t max_p = 200;
    std::size_t max_r = 200;
    std::string index;
    std::size_t jobs = 0;
};

inline classify_options classify_options_of(const settings& s, const binary_morphism& f) {
    classify_options o;
    o.eventual_k_max = s.kmax;
    o.horizon = s.horizon;
    if (s.max_period != 0 || s.max_preperiod != 0) {
        periodicity_bounds b = default_periodicity_bounds(f);
        if (s.max_period != 0) b.max_period = s.max_period;
        if (s.max_preperiod != 0) b.max_preperiod = s.max_preperiod;
        o.periodicity = b;
    }
    return o;
}

inline periodicity_bounds periodicity_bounds_of(const settings& s, const binary_morphism& f) {
    periodicity_bounds b = default_periodicity_bounds(f);
    if (s.max_period != 0) b.max_period = s.max_period;
    if (s.max_preperiod != 0) b.max_preperiod = s.max_preperiod;
    return b;
}

inline void require_format(const std::string& fmt, std::initializer_list<std::string_view> allowed,
                           const std::string& verb) {
    if (std::find(allowed.begin(), allowed.end(), fmt) == allowed.end())
        throw error(errc::syntax_error, "format " + fmt + " is not available for " + verb);
}

inline void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// One verb each. They write the artifact and return the exit status.

inline int run_classify(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "json" : s.format;
    require_format(fmt, {"json", "text"}, "classify");
    if (s.corpus.empty()) {
        const binary_morphism f = load_morphism(s.morphism);
        const classify_options opts = classify_options_of(s, f);
        const verdict v = classify(f, opts);
        if (fmt == "json")
            emit_json(out, to_json(v, opts));
        else
            write_text(out, v);
        return v.result == answer::unknown ? unknown_answer : ok;
    }

    // Batch: items are independent, results are written in input order.
    struct item {
        json report;
        std::string line;
        bool failed = false;
        bool unknown = false;
    };
    const std::vector<std::string> lines = read_corpus(s.corpus);
    std::vector<item> items(lines.size());
    const std::size_t workers =
        std::max<std::size_t>(1, s.jobs != 0 ? s.jobs : std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
            item& it = items[i];
            try {
                const binary_morphism f = parse_morphism(lines[i]);
                const classify_options opts = classify_options_of(s, f);
                const verdict v = classify(f, opts);
                it.report = to_json(v, opts);
                it.unknown = v.result == answer::unknown;
                std::ostringstream row;
                row << f.str() << '\t' << to_string(v.result) << '\t' << to_string(v.grade) << '\t'
                    << to_string(v.reason);
                it.line = row.str();
            } catch (const error& e) {
                it.failed = true;
                it.report = {{"input", lines[i]}, {"error", e.what()}};
                it.line = lines[i] + "\terror\t" + e.what();
            }
        }
    };
    std::vector<std::future<void>> pool;
    for (std::size_t w = 0; w < std::min(workers, std::max<std::size_t>(1, lines.size())); ++w)
        pool.push_back(std::async(std::launch::async, work));
    for (auto& p : pool) p.get();

    bool failed = false;
    bool unknown = false;
    json all = json::array();
    for (const item& it : items) {
        failed = failed || it.failed;
        unknown = unknown || it.unknown;
        if (fmt == "json")
            all.push_back(it.report);
        else
            out << it.line << '\n';
    }
    if (fmt == "json") emit_json(out, all);
    return failed ? input_error : unknown ? unknown_answer : ok;
}

inline int run_pure(const settings& s, std::ostream& out) {
    require_format(s.format.empty() ? "json" : s.format, {"json"}, "pure");
    const binary_morphism f = load_morphism(s.morphism);
    const rank1_form form = rank1_form_of(f);
    const pure_verdict p = decide_pure(f);
    json j;
    j["morphism"] = to_json(f);
    j["rank1"] = to_json(form);
    j["pure"] = to_json(p);
    emit_json(out, j);
    return p.outcome == pure_outcome::resource_exhausted ? unknown_answer : ok;
}

inline int run_eventual(const settings& s, std::ostream& out) {
    require_format(s.format.empty() ? "json" : s.format, {"json"}, "eventual");
    const binary_morphism f = load_morphism(s.morphism);
    const rank1_form form = rank1_form_of(f);
    json scans = json::array();
    bool found = false;
    bool complete = true;
    for (std::uint64_t K = 1; K <= s.kmax && !found; ++K) {
        const eventual_scan_result r = eventual_scan(f, form, K, 1'000'000);
        json row = {{"K", K}, {"period", to_json(chunk_length(form, K))},
                    {"offsets_checked", to_json(r.offsets_checked)}, {"complete", r.complete}};
        row["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
        found = r.witness.has_value();
        complete = complete && r.complete;
        scans.push_back(std::move(row));
    }
    json j;
    j["morphism"] = to_json(f);
    j["rank1"] = to_json(form);
    j["kmax"] = s.kmax;
    j["scans"] = std::move(scans);
    emit_json(out, j);
    return found ? ok : unknown_answer;
}

inline int run_prefix(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "text" : s.format;
    require_format(fmt, {"text", "json"}, "prefix");
    const binary_morphism f = load_morphism(s.morphism);
    const word w = fixed_point_prefix(f, s.length);
    if (fmt == "json")
        emit_json(out, {{"morphism", to_json(f)}, {"length", s.length}, {"prefix", w.str()}});
    else
        out << w << '\n';
    return ok;
}

inline int run_complexity(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "csv" : s.format;
    require_format(fmt, {"csv", "json"}, "complexity");
    const binary_morphism f = load_morphism(s.morphism);
    const std::size_t nmax = s.nmax != 0 ? s.nmax : s.horizon / 2;
    const complexity_profile p = make_complexity_profile(fixed_point_prefix(f, s.horizon), nmax);
    if (fmt == "csv") {
        write_complexity_csv(out, p);
    } else {
        emit_json(out, {{"morphism", to_json(f)},
                        {"horizon", p.horizon},
                        {"complexity", p.abelian_complexity},
                        {"imbalance", p.imbalance}});
    }
    return ok;
}

inline int run_path(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "csv" : s.format;
    require_format(fmt, {"csv", "json"}, "path");
    const binary_morphism f = load_morphism(s.morphism);
    const auto ys = lattice_path_heights(fixed_point_prefix(f, s.length != 0 ? s.length : s.horizon));
    if (fmt == "csv")
        write_path_csv(out, ys);
    else
        emit_json(out, {{"morphism", to_json(f)}, {"heights", ys}});
    return ok;
}

inline int run_lift(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "json" : s.format;
    require_format(fmt, {"json", "text"}, "lift");
    const binary_morphism f = load_morphism(s.morphism);
    const uniform_lift lift = build_lift(f);
    if (fmt == "json") {
        json j = to_json(lift);
        j["bijective"] = is_bijective(lift);
        emit_json(out, j);
    } else {
        for (std::size_t q = 0; q < lift.size(); ++q) {
            out << q + 1 << " -> ";
            for (std::size_t t : lift.images[q]) out << t + 1 << ' ';
            out << "/ " << to_char(lift.coding[q]) << '\n';
        }
    }
    return ok;
}

inline int run_dfao(const settings& s, std::ostream& out) {
    const std::string fmt = s.format.empty() ? "dot" : s.format;
    require_format(fmt, {"dot", "json", "text"}, "dfao");
    const binary_morphism f = load_morphism(s.morphism);
    const uniform_lift lift = build_lift(f);
    if (!s.index.empty()) {
        big_int n;
        try {
            n = big_int(s.index);
        } catch (const std::exception&) {
            throw error(errc::syntax_error, "index " + s.index + " is not an integer");
        }
        const letter c = dfao_eval(lift, n);
        if (fmt == "json")
            emit_json(out, {{"index", s.index}, {"letter", std::string(1, to_char(c))}});
        else
            out << to_char(c) << '\n';
        return ok;
    }
    if (fmt == "dot")
        out << to_dot(lift);
    else if (fmt == "json")
        emit_json(out, to_json(lift));
    else
        run_lift(s, out);
    return ok;
}

inline int run_oracle(const settings& s, std::ostream& out) {
    require_format(s.format.empty() ? "json" : s.format, {"json"}, "oracle");
    const binary_morphism f = load_morphism(s.morphism);
    const word w = fixed_point_prefix(f, s.horizon);
    const auto hit = abelian_period_oracle(w, s.max_p, s.max_r);
    json j;
    j["morphism"] = to_json(f);
    j["horizon"] = s.horizon;
    j["max_p"] = s.max_p;
    j["max_r"] = s.max_r;
    j["witness"] = hit ? json{{"preperiod", hit->preperiod}, {"period", hit->period}} : json(nullptr);
    emit_json(out, j);
    return ok;
}

inline int run_periodic(const settings& s, std::ostream& out) {
    require_format(s.format.empty() ? "json" : s.format, {"json"}, "periodic");
    const binary_morphism f = load_morphism(s.morphism);
    const periodicity_bounds b = periodicity_bounds_of(s, f);
    const periodicity_verdict v = decide_periodic(f, b);
    json j;
    j["morphism"] = to_json(f);
    j["result"] = to_json(v);
    j["bounds"] = {{"max_period", b.max_period}, {"max_preperiod", b.max_preperiod}};
    emit_json(out, j);
    return ok;
}

inline int run_residues(const settings& s, std::ostream& out) {
    require_format(s.format.empty() ? "json" : s.format, {"json"}, "residues");
    const binary_morphism f = load_morphism(s.morphism);
    const rank1_form form = rank1_form_of(f);
    const auto res = block_position_residues(f, form, s.t, s.d, s.horizon);
    json j;
    j["morphism"] = to_json(f);
    j["t"] = s.t;
    j["d"] = s.d;
    j["horizon"] = s.horizon;
    j["residues"] = std::vector<std::uint64_t>(res.begin(), res.end());
    j["complete"] = res.size() == s.d;
    emit_json(out, j);
    return ok;
}

/// Parses argv, runs one verb, writes the artifact to `out` (or -o) and
/// one-line diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Abelian periodicity of binary morphic words"};
    app.require_subcommand(1);
    settings s;

    auto add_morphism = [&](CLI::App* c) {
        c->add_option("morphism", s.morphism, "morphism text (a->..; b->..) or a file holding it");
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", s.format, "json, csv, dot or text")
            ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
        c->add_option("-o,--output", s.output, "write the artifact here instead of stdout");
    };
    auto add_horizon = [&](CLI::App* c) {
        c->add_option("--horizon", s.horizon, "prefix length")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 32));
    };
    auto add_period_bounds = [&](CLI::App* c) {
        c->add_option("--max-period", s.max_period, "periodicity search bound on |w|");
        c->add_option("--max-preperiod", s.max_preperiod, "periodicity search bound on |u|");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "decide abelian periodicity of f^w(a)");
    add_morphism(classify_cmd);
    add_common(classify_cmd);
    add_horizon(classify_cmd);
    add_period_bounds(classify_cmd);
    classify_cmd->add_option("--kmax", s.kmax, "eventual scan depth")->check(CLI::Range(1, 64));
    classify_cmd->add_option("--corpus", s.corpus, "file with one morphism per line");
    classify_cmd->add_option("--jobs", s.jobs, "worker threads for --corpus (0: all cores)");

    CLI::App* pure_cmd = app.add_subcommand("pure", "exact pure abelian periodicity for rank-1 morphisms");
    add_morphism(pure_cmd);
    add_common(pure_cmd);

    CLI::App* eventual_cmd = app.add_subcommand("eventual", "scan for eventual-case cut offsets");
    add_morphism(eventual_cmd);
    add_common(eventual_cmd);
    eventual_cmd->add_option("--kmax", s.kmax, "largest K to scan")->check(CLI::Range(1, 64));

    CLI::App* prefix_cmd = app.add_subcommand("prefix", "prefix of the fixed point");
    add_morphism(prefix_cmd);
    add_common(prefix_cmd);
    prefix_cmd->add_option("-n,--length", s.length, "prefix length")->required();

    CLI::App* complexity_cmd = app.add_subcommand("complexity", "abelian complexity and imbalance per length");
    add_morphism(complexity_cmd);
    add_common(complexity_cmd);
    add_horizon(complexity_cmd);
    complexity_cmd->add_option("--nmax", s.nmax, "largest window length (default horizon/2)");

    CLI::App* path_cmd = app.add_subcommand("path", "lattice path heights |u|_a - |u|_b of prefixes");
    add_morphism(path_cmd);
    add_common(path_cmd);
    add_horizon(path_cmd);
    path_cmd->add_option("-n,--length", s.length, "prefix length (default horizon)");

    CLI::App* lift_cmd = app.add_subcommand("lift", "uniform lift and coding of a rank-1 morphism");
    add_morphism(lift_cmd);
    add_common(lift_cmd);

    CLI::App* dfao_cmd = app.add_subcommand("dfao", "automaton with output for a rank-1 morphism");
    add_morphism(dfao_cmd);
    add_common(dfao_cmd);
    dfao_cmd->add_option("--index", s.index, "evaluate the letter at this position");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force abelian period search on a prefix");
    add_morphism(oracle_cmd);
    add_common(oracle_cmd);
    add_horizon(oracle_cmd);
    oracle_cmd->add_option("--max-p", s.max_p, "largest period");
    oracle_cmd->add_option("--max-r", s.max_r, "largest preperiod");

    CLI::App* periodic_cmd = app.add_subcommand("periodic", "certified periodicity search");
    add_morphism(periodic_cmd);
    add_common(periodic_cmd);
    add_period_bounds(periodic_cmd);

    CLI::App* residues_cmd = app.add_subcommand("residues", "t-block-positions of f(a) modulo d");
    add_morphism(residues_cmd);
    add_common(residues_cmd);
    add_horizon(residues_cmd);
    residues_cmd->add_option("-t", s.t, "block level")->check(CLI::PositiveNumber);
    residues_cmd->add_option("-d", s.d, "modulus")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string verb = cmd->get_name();
    if (verb != "classify" || s.corpus.empty())
        if (s.morphism.empty()) {
            err << "error: " << verb << " needs a morphism\n";
            return input_error;
        }

    std::ofstream file;
    if (!s.output.empty()) {
        file.open(s.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << s.output << '\n';
            return input_error;
        }
    }
    std::ostream& sink = s.output.empty() ? out : file;

    try {
        if (verb == "classify") return run_classify(s, sink);
        if (verb == "pure") return run_pure(s, sink);
        if (verb == "eventual") return run_eventual(s, sink);
        if (verb == "prefix") return run_prefix(s, sink);
        if (verb == "complexity") return run_complexity(s, sink);
        if (verb == "path") return run_path(s, sink);
        if (verb == "lift") return run_lift(s, sink);
        if (verb == "dfao") return run_dfao(s, sink);
        if (verb == "oracle") return run_oracle(s, sink);
        if (verb == "periodic") return run_periodic(s, sink);
        if (verb == "residues") return run_residues(s, sink);
    } catch (const error& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
    return input_error;
}

} // namespace abper::cli

#endif // ABPER_TOOLS_CLI_HPP
