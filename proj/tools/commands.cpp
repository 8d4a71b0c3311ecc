#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bipdeg/gen.hpp"
#include "bipdeg/oracle.hpp"

namespace bipdeg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_g(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", x);
    return buf;
}

std::string join(const std::vector<int>& xs, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(xs[i]);
    }
    return s;
}

std::string tuple(const std::vector<int>& xs) { return "(" + join(xs, ",") + ")"; }

// Text after '#' is a comment.
std::string_view strip_comment(std::string_view line) {
    if (auto p = line.find('#'); p != std::string_view::npos) line = line.substr(0, p);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
        line.remove_suffix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
        line.remove_prefix(1);
    return line;
}

SearchConfig make_config(const std::string& lc, int threads) {
    SearchConfig c;
    c.lc = LcPolicy::parse(lc);
    c.parallel_width = std::max(1, threads);
    return c;
}

int default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// Runs body(i) for i in [0, count) on up to `threads` workers.
template <class F>
void parallel_for(std::size_t count, int threads, F&& body) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const auto width = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
    for (std::size_t t = 0; t < width; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) body(i);
        });
}

int cmd_decide(const std::vector<std::string>& terms, const std::string& lc, int threads,
               bool json, std::istream& in, std::ostream& out, std::ostream& err) {
    SearchConfig config;
    try {
        config = make_config(lc, threads);
    } catch (const InvalidInput& e) {
        err << e.what() << '\n';
        return kInvalid;
    }
    std::string text;
    if (terms.empty())
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    else
        for (const auto& t : terms) text += t + ' ';

    const Record r = decide_text(text, config);
    if (r.error) err << *r.error << '\n';
    if (json)
        out << to_json(r).dump() << '\n';
    else if (!r.error)
        out << to_human(r) << '\n';
    return r.exit_code();
}

int cmd_batch(const std::string& input, const std::string& output, const std::string& lc,
              int threads, std::ostream& out, std::ostream& err) {
    SearchConfig config;
    try {
        config = make_config(lc, 1);
    } catch (const InvalidInput& e) {
        err << e.what() << '\n';
        return kInvalid;
    }
    std::ifstream file(input);
    if (!file) {
        err << "cannot read " << input << '\n';
        return kInvalid;
    }
    std::vector<std::string> lines;
    for (std::string line; std::getline(file, line);) {
        std::string_view body = strip_comment(line);
        if (!body.empty()) lines.emplace_back(body);
    }

    std::vector<Record> records(lines.size());
    parallel_for(lines.size(), threads,
                 [&](std::size_t i) { records[i] = decide_text(lines[i], config); });

    std::ofstream file_out;
    if (!output.empty()) {
        file_out.open(output);
        if (!file_out) {
            err << "cannot write " << output << '\n';
            return kInvalid;
        }
    }
    std::ostream& sink = output.empty() ? out : file_out;
    std::size_t yes = 0, no = 0, invalid = 0;
    for (const auto& r : records) {
        sink << to_json(r).dump() << '\n';
        (r.verdict == "yes" ? yes : r.verdict == "no" ? no : invalid)++;
    }
    err << "yes=" << yes << " no=" << no << " invalid=" << invalid << '\n';
    return 0;
}

int cmd_tables(int n_min, int n_max, const std::string& lc, int threads, std::ostream& out,
               std::ostream& err) {
    SearchConfig config;
    try {
        config = make_config(lc, 1);
    } catch (const InvalidInput& e) {
        err << e.what() << '\n';
        return kInvalid;
    }
    if (n_max < n_min) {
        err << "--n-max must be at least --n-min\n";
        return kInvalid;
    }
    if (n_max > 14) err << "warning: n > 14 takes hours; consider a smaller --n-max\n";
    out << "n\tD\tr\tr/D\tB\tB_w\tB_w/B\n";
    for (int n = n_min; n <= n_max; ++n) {
        const TableRow row = tabulate(n, config, threads);
        const auto ratio = [](std::uint64_t p, std::uint64_t q) {
            return q ? static_cast<double>(p) / static_cast<double>(q) : 0.0;
        };
        out << row.n << '\t' << row.D << '\t' << row.r << '\t' << fmt_g(ratio(row.r, row.D))
            << '\t' << row.B << '\t' << row.B_w << '\t' << fmt_g(ratio(row.B_w, row.B)) << '\n'
            << std::flush;
    }
    return 0;
}

int cmd_gen(const GenSpec& spec, std::ostream& out, std::ostream& err) {
    try {
        SequenceGenerator gen(spec);
        for (int i = 0; i < spec.count; ++i) out << join(gen.next().vec(), " ") << '\n';
    } catch (const GenerationFailure& e) {
        err << e.what() << '\n';
        return kInvalid;
    }
    return 0;
}

struct BenchOptions {
    int n = 0;
    int trials = 5;
    std::string lc = "n";
    bool hard = false;
    int d1 = 0, dn = 0;
    std::uint64_t seed = 1;
    int threads = 1;
    bool json = false;
};

int cmd_bench(const BenchOptions& o, std::ostream& out, std::ostream& err) {
    SearchConfig config;
    try {
        config = make_config(o.lc, o.threads);
    } catch (const InvalidInput& e) {
        err << e.what() << '\n';
        return kInvalid;
    }
    if (!o.hard && (o.d1 == 0 || o.dn == 0)) {
        err << "bench needs --hard or both --d1 and --dn\n";
        return kInvalid;
    }
    std::mt19937_64 rng(o.seed);
    std::vector<double> times;
    std::size_t yes = 0, no = 0;
    for (int t = 0; t < o.trials; ++t) {
        GenSpec spec{o.n, o.d1, o.dn, rng(), 1};
        if (o.hard) spec = hard_spec(o.n, rng);
        DegreeSequence d;
        try {
            d = random_graphical(spec);
        } catch (const GenerationFailure& e) {
            err << e.what() << '\n';
            return kInvalid;
        }
        const auto t0 = Clock::now();
        const Verdict v = decide(d, config);
        const double ms = ms_since(t0);
        times.push_back(ms);
        (v.potentially_bipartite ? yes : no)++;
        if (!o.json)
            out << "trial " << t << ": d1=" << d.max() << " dn=" << d.min() << ' '
                << (v.potentially_bipartite ? "yes" : "no") << ' ' << fmt_g(ms) << " ms\n";
    }
    std::vector<double> sorted = times;
    std::ranges::sort(sorted);
    double min = 0, median = 0, max = 0;
    if (!sorted.empty()) {
        min = sorted.front();
        max = sorted.back();
        const std::size_t m = sorted.size() / 2;
        median = sorted.size() % 2 ? sorted[m] : (sorted[m - 1] + sorted[m]) / 2;
    }
    if (o.json) {
        out << nlohmann::json{{"n", o.n},           {"trials", o.trials},
                              {"lc", config.lc.to_string()},
                              {"min_ms", min},      {"median_ms", median},
                              {"max_ms", max},      {"yes", yes},
                              {"no", no},           {"times_ms", times}}
                   .dump()
            << '\n';
    } else {
        out << "n=" << o.n << " trials=" << o.trials << " lc=" << config.lc.to_string()
            << " min=" << fmt_g(min) << "ms median=" << fmt_g(median) << "ms max=" << fmt_g(max)
            << "ms yes=" << yes << " no=" << no << '\n';
    }
    return 0;
}

}  // namespace

std::vector<int> parse_sequence(std::string_view text) {
    std::vector<int> xs;
    std::size_t i = 0;
    const auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
    while (i < text.size()) {
        if (is_sep(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !is_sep(text[j])) ++j;
        const std::string_view token = text.substr(i, j - i);
        int value = 0;
        const char* first = token.data();
        const char* last = first + token.size();
        if (!token.empty() && token.front() == '+') ++first;
        auto [end, ec] = std::from_chars(first, last, value);
        if (ec != std::errc() || end != last)
            throw InvalidInput("bad term '" + std::string(token) + "'");
        xs.push_back(value);
        i = j;
    }
    return xs;
}

int Record::exit_code() const {
    if (verdict == "yes") return kYes;
    if (verdict == "no") return kNo;
    return kInvalid;
}

Record decide_values(const std::vector<int>& raw, const SearchConfig& config) {
    Record r;
    r.input = raw;
    const auto t0 = Clock::now();
    try {
        const Normalized norm = normalize(raw);
        r.sequence = norm.sequence.vec();
        r.zeros_dropped = norm.zeros_dropped;
        const Verdict v = decide(norm.sequence, config);
        r.verdict = v.potentially_bipartite ? "yes" : "no";
        r.exact = v.exact;
        r.phase = v.phase;
        if (v.witness) {
            r.a = v.witness->a.vec();
            r.b = v.witness->b.vec();
        } else {
            r.certificate = v.certificate();
        }
    } catch (const std::invalid_argument& e) {
        r.verdict = "invalid";
        r.error = e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

Record decide_text(std::string_view text, const SearchConfig& config) {
    std::vector<int> raw;
    try {
        raw = parse_sequence(text);
    } catch (const InvalidInput& e) {
        Record r;
        r.verdict = "invalid";
        r.error = e.what();
        return r;
    }
    return decide_values(raw, config);
}

nlohmann::json to_json(const Record& r) {
    using nlohmann::json;
    const auto opt = [](const auto& o) { return o ? json(*o) : json(nullptr); };
    return json{{"input", opt(r.input)},
                {"verdict", r.verdict},
                {"sequence", opt(r.sequence)},
                {"a", opt(r.a)},
                {"b", opt(r.b)},
                {"certificate", opt(r.certificate)},
                {"exact", opt(r.exact)},
                {"phase", opt(r.phase)},
                {"elapsed_ms", r.elapsed_ms},
                {"zeros_dropped", r.zeros_dropped},
                {"error", opt(r.error)}};
}

std::string to_human(const Record& r) {
    std::ostringstream s;
    if (r.verdict == "invalid") {
        s << "invalid: " << r.error.value_or("unknown error");
        return s.str();
    }
    s << tuple(*r.sequence) << ": "
      << (r.verdict == "yes" ? "potentially bipartite" : "not potentially bipartite") << '\n';
    if (r.a) {
        s << "  a = " << tuple(*r.a) << '\n' << "  b = " << tuple(*r.b) << '\n';
    } else {
        s << "  certificate: " << *r.certificate << '\n';
    }
    if (r.zeros_dropped) s << "  note: " << r.zeros_dropped << " zero term(s) dropped\n";
    s << "  phase " << *r.phase << ", " << (*r.exact ? "exact" : "budget-limited") << ", "
      << fmt_g(r.elapsed_ms) << " ms";
    return s.str();
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Decide whether a graphical degree sequence has a bipartite realization.",
                 "bipdeg"};
    app.require_subcommand(1);

    std::vector<std::string> terms;
    std::string lc = "n";
    int threads = 1;
    bool json = false;
    auto* decide_cmd = app.add_subcommand("decide", "Decide one sequence");
    decide_cmd->add_option("terms", terms, "Degrees (read from stdin when omitted)");
    decide_cmd->add_option("--lc", lc, "Combinations per search node: int, n, kn or unlimited")
        ->capture_default_str();
    decide_cmd->add_option("--threads", threads, "Search workers")->check(CLI::PositiveNumber);
    decide_cmd->add_flag("--json", json, "Print one JSON record");

    std::string input, output, batch_lc = "n";
    int batch_threads = 1;
    auto* batch_cmd = app.add_subcommand("batch", "Decide one sequence per line of a file");
    batch_cmd->add_option("--input", input, "Input file")->required();
    batch_cmd->add_option("--output", output, "Output file (default stdout)");
    batch_cmd->add_option("--lc", batch_lc, "Combinations per search node")->capture_default_str();
    batch_cmd->add_option("--threads", batch_threads, "Workers")->check(CLI::PositiveNumber);

    int n_min = 6, n_max = 0, table_threads = default_threads();
    std::string table_lc = "1";
    auto* tables_cmd = app.add_subcommand("tables", "Census of all graphical sequences per n");
    tables_cmd->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(1, 30))->capture_default_str();
    tables_cmd->add_option("--n-max", n_max, "Largest n (default --n-min)")->check(CLI::Range(1, 30));
    tables_cmd->add_option("--lc", table_lc, "Combinations per search node")->capture_default_str();
    tables_cmd->add_option("--threads", table_threads, "Workers")->check(CLI::PositiveNumber);

    GenSpec spec;
    auto* gen_cmd = app.add_subcommand("gen", "Random graphical sequences with fixed extremes");
    gen_cmd->add_option("--n", spec.n, "Length")->required()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--d1", spec.d1, "Largest term")->required();
    gen_cmd->add_option("--dn", spec.dn, "Smallest term")->required();
    gen_cmd->add_option("--count", spec.count, "Sequences to emit")->capture_default_str();
    gen_cmd->add_option("--seed", spec.seed, "Random seed")->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time decide on generated instances");
    bench_cmd->add_option("--n", bench.n, "Length")->required()->check(CLI::Range(2, 1 << 20));
    bench_cmd->add_option("--trials", bench.trials, "Instances")->capture_default_str();
    bench_cmd->add_option("--lc", bench.lc, "Combinations per search node")->capture_default_str();
    bench_cmd->add_flag("--hard", bench.hard,
                        "Draw d1 in [0.5n, 0.6n] and dn in [1, 0.1n] per instance");
    bench_cmd->add_option("--d1", bench.d1, "Largest term (without --hard)");
    bench_cmd->add_option("--dn", bench.dn, "Smallest term (without --hard)");
    bench_cmd->add_option("--seed", bench.seed, "Random seed")->capture_default_str();
    bench_cmd->add_option("--threads", bench.threads, "Search workers")->check(CLI::PositiveNumber);
    bench_cmd->add_flag("--json", bench.json, "Print the summary as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : kInvalid;
    }

    if (decide_cmd->parsed()) return cmd_decide(terms, lc, threads, json, in, out, err);
    if (batch_cmd->parsed()) return cmd_batch(input, output, batch_lc, batch_threads, out, err);
    if (tables_cmd->parsed())
        return cmd_tables(n_min, n_max ? n_max : n_min, table_lc, table_threads, out, err);
    if (gen_cmd->parsed()) return cmd_gen(spec, out, err);
    return cmd_bench(bench, out, err);
}

}  // namespace bipdeg::cli
