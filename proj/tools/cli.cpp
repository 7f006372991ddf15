#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lispace/adjustable.hpp"
#include "lispace/errors.hpp"
#include "lispace/generate.hpp"
#include "lispace/oracle.hpp"
#include "lispace/patience.hpp"
#include "lispace/permutation.hpp"
#include "lispace/reconstruct.hpp"
#include "lispace/sequence.hpp"

namespace lispace::cli {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::size_t sqrt_budget(std::size_t n) {
    return std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n)))));
}

struct RunReport {
    std::string algorithm;
    std::size_t n = 0;
    std::size_t lis = 0;
    std::size_t s = 0;  // 0 when the algorithm takes no budget
    std::size_t peak_words = 0;
    AccessStats stats;
    double time_ms = 0.0;

    void print_plain(std::ostream& os) const {
        os << "lis=" << lis << "\n"
           << "algorithm=" << algorithm << "\n"
           << "n=" << n << "\n"
           << "s=" << s << "\n"
           << "peak_words=" << peak_words << "\n"
           << "reads=" << stats.reads << "\n"
           << "forward_passes=" << stats.forward_passes << "\n"
           << "backward_passes=" << stats.backward_passes << "\n"
           << "reversals=" << stats.reversals << "\n"
           << "seek_cost=" << stats.seek_cost << "\n"
           << "time_ms=" << std::fixed << std::setprecision(3) << time_ms << "\n";
        os.unsetf(std::ios::floatfield);
    }

    void print_json(std::ostream& os) const {
        nlohmann::json j{{"lis", lis},
                         {"algorithm", algorithm},
                         {"n", n},
                         {"s", s},
                         {"peak_words", peak_words},
                         {"reads", stats.reads},
                         {"forward_passes", stats.forward_passes},
                         {"backward_passes", stats.backward_passes},
                         {"reversals", stats.reversals},
                         {"seek_cost", stats.seek_cost},
                         {"time_ms", time_ms}};
        os << j.dump() << "\n";
    }

    void print(std::ostream& os, bool machine) const {
        machine ? print_json(os) : print_plain(os);
    }
};

FileFormat parse_format(const std::string& name) {
    if (name == "text") return FileFormat::text;
    if (name == "binary") return FileFormat::binary;
    throw CLI::ValidationError("--format", "expected 'text' or 'binary'");
}

void warn_budget(std::ostream& err, std::size_t requested, std::size_t n) {
    const std::size_t root = sqrt_budget(n);
    if (requested > n && n >= 2)
        err << "note: budget " << requested << " clamped to n=" << n << "\n";
    if (std::max<std::size_t>(requested, 2) < root)
        err << "note: budget below ceil(sqrt(n))=" << root
            << "; pass and space guarantees do not apply\n";
}

struct CommonOpts {
    std::string input;
    std::string format = "text";
    std::size_t budget = 0;  // 0 = default ceil(sqrt(n))
};

std::size_t pick_budget(std::size_t requested, std::size_t n, std::ostream& err) {
    if (requested == 0) return sqrt_budget(n);
    if (requested < 2) throw std::invalid_argument("--budget must be at least 2");
    warn_budget(err, requested, n);
    return std::min(requested, std::max<std::size_t>(n, 2));
}

int cmd_length(const CommonOpts& opts, const std::string& algorithm, bool machine,
               std::ostream& out, std::ostream& err) {
    auto source = open_file(opts.input, parse_format(opts.format));
    const std::size_t n = source->size();
    RunReport report;
    report.algorithm = algorithm;
    report.n = n;

    BudgetMeter meter;
    const auto start = Clock::now();
    if (algorithm == "classic") {
        report.lis = ps_piles(*source, &meter).lis();
    } else if (algorithm == "permutation") {
        if (!validate_permutation(*source, &meter)) {
            err << "error: input is not a permutation of 1..n\n";
            return 2;
        }
        report.lis = perm_lis_length(*source, &meter);
    } else if (algorithm == "adjustable") {
        const std::size_t s = pick_budget(opts.budget, n, err);
        AdjustableTrace trace;
        report.lis = adjustable_length(*source, View::full(n), Budget{s}, meter, &trace);
        report.s = trace.effective_s;
    } else {
        throw CLI::ValidationError("--algorithm",
                                   "expected classic, adjustable or permutation");
    }
    report.time_ms = elapsed_ms(start);
    report.peak_words = meter.peak_words();
    report.stats = source->stats();
    report.print(out, machine);
    return 0;
}

int cmd_extract(const CommonOpts& opts, bool machine, std::ostream& out,
                std::ostream& err) {
    auto source = open_file(opts.input, parse_format(opts.format));
    const std::size_t n = source->size();
    const std::size_t s = pick_budget(opts.budget, n, err);

    const auto start = Clock::now();
    ReconstructTrace trace;
    const LisResult result = find_lis(*source, Budget{s}, &trace);

    for (const Element& e : *result.subsequence)
        out << e.position << " " << e.value << "\n";

    RunReport report;
    report.algorithm = "extract";
    report.n = n;
    report.lis = result.length;
    report.s = s;
    report.peak_words = trace.peak_words;
    report.stats = source->stats();
    report.time_ms = elapsed_ms(start);
    report.print(err, machine);
    return 0;
}

int cmd_generate(const std::string& kind, std::size_t n, std::uint64_t seed,
                 std::ostream& out) {
    std::vector<std::int64_t> values;
    if (kind == "random-permutation")
        values = random_permutation(n, seed);
    else if (kind == "random-multiset")
        values = random_multiset(n, seed);
    else if (kind == "hard-instance")
        values = hard_instance(n, seed);
    else
        throw CLI::ValidationError(
            "--kind", "expected random-permutation, random-multiset or hard-instance");
    for (const std::int64_t v : values) out << v << "\n";
    return 0;
}

int cmd_bench(const CommonOpts& opts, const std::string& kind, std::size_t n,
              std::uint64_t seed, const std::vector<std::size_t>& budgets,
              std::size_t reps, std::ostream& out, std::ostream& err) {
    std::unique_ptr<SequenceSource> source;
    if (!opts.input.empty()) {
        source = open_file(opts.input, parse_format(opts.format));
    } else if (!kind.empty()) {
        std::vector<std::int64_t> values;
        if (kind == "random-permutation")
            values = random_permutation(n, seed);
        else if (kind == "random-multiset")
            values = random_multiset(n, seed);
        else if (kind == "hard-instance")
            values = hard_instance(n, seed);
        else
            throw CLI::ValidationError("--kind", "unknown generator kind");
        source = open_array(std::move(values));
    } else {
        throw CLI::RequiredError("--input or --kind");
    }

    const std::size_t length = source->size();
    out << "n,s,lis,time_ms,peak_words,forward_passes,backward_passes,reads\n";
    for (const std::size_t requested : budgets) {
        std::size_t s = requested;
        if (requested > length && length >= 2) {
            err << "note: budget " << requested << " clamped to n=" << length << "\n";
            s = length;
        }
        s = std::max<std::size_t>(2, std::min(s, std::max<std::size_t>(length, 2)));
        for (std::size_t rep = 0; rep < reps; ++rep) {
            source->reset_stats();
            BudgetMeter meter;
            const auto start = Clock::now();
            const std::size_t lis =
                adjustable_length(*source, View::full(length), Budget{s}, meter);
            const double ms = elapsed_ms(start);
            const AccessStats& st = source->stats();
            out << length << "," << s << "," << lis << "," << std::fixed
                << std::setprecision(3) << ms << "," << meter.peak_words() << ","
                << st.forward_passes << "," << st.backward_passes << "," << st.reads
                << "\n";
            out.unsetf(std::ios::floatfield);
        }
    }
    return 0;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Space-budgeted longest increasing subsequence toolkit"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string algorithm = "adjustable";
    bool machine = false;
    std::string kind;
    std::size_t gen_n = 0;
    std::uint64_t seed = 1;
    std::vector<std::size_t> budgets;
    std::size_t reps = 1;

    auto* length = app.add_subcommand("length", "Compute the lis length of a file");
    length->add_option("--input", opts.input, "input file")->required();
    length->add_option("--format", opts.format, "text|binary");
    length->add_option("--budget", opts.budget, "working-space budget s (words)");
    length->add_option("--algorithm", algorithm, "classic|adjustable|permutation");
    length->add_flag("--machine-readable", machine, "emit one JSON object");

    auto* extract = app.add_subcommand("extract", "Extract a lis under a budget");
    extract->add_option("--input", opts.input, "input file")->required();
    extract->add_option("--format", opts.format, "text|binary");
    extract->add_option("--budget", opts.budget, "working-space budget s (words)");
    extract->add_flag("--machine-readable", machine, "emit the report as JSON");

    auto* generate = app.add_subcommand("generate", "Write a test input to stdout");
    generate
        ->add_option("--kind", kind,
                     "random-permutation|random-multiset|hard-instance")
        ->required();
    generate->add_option("--n", gen_n, "size (half-length for hard-instance)")
        ->required()
        ->check(CLI::PositiveNumber);
    generate->add_option("--seed", seed, "RNG seed");

    auto* bench = app.add_subcommand("bench", "CSV timing/instrumentation table");
    bench->add_option("--input", opts.input, "input file");
    bench->add_option("--format", opts.format, "text|binary");
    bench->add_option("--kind", kind, "generator kind (alternative to --input)");
    bench->add_option("--n", gen_n, "generator size");
    bench->add_option("--seed", seed, "generator seed");
    bench->add_option("--budgets", budgets, "budgets s to benchmark")
        ->required()
        ->delimiter(',');
    bench->add_option("--reps", reps, "repetitions per budget")
        ->check(CLI::PositiveNumber);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (length->parsed()) return cmd_length(opts, algorithm, machine, out, err);
        if (extract->parsed()) return cmd_extract(opts, machine, out, err);
        if (generate->parsed()) return cmd_generate(kind, gen_n, seed, out);
        return cmd_bench(opts, kind, gen_n, seed, budgets, reps, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << "\n";
        return 1;
    } catch (const IntegrityError& e) {
        err << "internal invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "invalid arguments: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lispace::cli
