// Copyright 2026 The subsel Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: build an index file, answer queries, replay query
// batches, cross-check against brute force, and time queries.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "subsel/oracle.hpp"
#include "subsel/serialize.hpp"
#include "subsel/subsel.hpp"

namespace {

using subsel::pos_t;

enum Exit : int {
    kOk = 0,
    kVerifyFailed = 1,
    kIoError = 2,
    kEmptyInput = 3,
    kBadArguments = 4,
    kCorruptIndex = 5,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw std::ios_base::failure("cannot read " + path);
    return buffer.str();
}

int clamp_tau(int tau, pos_t n) {
    const int top = subsel::MinSuffixIndex::max_tau(n);
    if (tau < 1 || tau > top) {
        const int clamped = std::clamp(tau, 1, top);
        std::cerr << "warning: tau " << tau << " outside [1, " << top << "], using " << clamped << "\n";
        return clamped;
    }
    return tau;
}

pos_t parse_position(const std::string& token) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(token, &used);
    } catch (const std::exception&) {
        throw UsageError("not an integer: '" + token + "'");
    }
    if (used != token.size()) throw UsageError("not an integer: '" + token + "'");
    return static_cast<pos_t>(value);
}

void check_range(pos_t i, pos_t j, pos_t n) {
    if (i < 1 || j > n || i > j) {
        throw UsageError("range [" + std::to_string(i) + ", " + std::to_string(j) + "] outside [1, " + std::to_string(n) + "]");
    }
}

/// Runs one query; `args` excludes the operation name. Each output line is a
/// list of tab-separated fields.
std::vector<std::vector<pos_t>> run_query(const subsel::SubstringIndex& index, const std::string& op, const std::vector<pos_t>& args) {
    const pos_t n = index.size();
    auto expect = [&](std::size_t count) {
        if (args.size() != count) {
            throw UsageError(op + " takes " + std::to_string(count) + " numbers, got " + std::to_string(args.size()));
        }
    };
    if (op == "minsuf" || op == "maxsuf") {
        expect(2);
        check_range(args[0], args[1], n);
        const auto s = op == "minsuf" ? index.min_suffix(args[0], args[1]) : index.max_suffix(args[0], args[1]);
        return {{s.start, s.length}};
    }
    if (op == "select") {
        expect(3);
        check_range(args[0], args[1], n);
        if (args[2] < 1 || args[2] > args[1] - args[0] + 1) throw UsageError("k outside [1, j - i + 1]");
        const auto s = index.select(args[0], args[1], args[2]);
        return {{s.start, s.length}};
    }
    if (op == "lyndon") {
        expect(2);
        check_range(args[0], args[1], n);
        std::vector<std::vector<pos_t>> out;
        for (const auto& run : index.lyndon(args[0], args[1])) out.push_back({run.start, run.length, run.exponent});
        return out;
    }
    if (op == "psq") {
        expect(4);
        check_range(args[0], args[1], n);
        check_range(args[2], args[3], n);
        std::vector<std::vector<pos_t>> out;
        for (const auto& p : index.prefix_suffix({args[0], args[1]}, {args[2], args[3]})) out.push_back({p.smallest, p.diff, p.count});
        return out;
    }
    throw UsageError("unknown operation '" + op + "'");
}

void print_fields(std::ostream& out, const std::vector<pos_t>& fields) {
    for (std::size_t k = 0; k < fields.size(); ++k) out << (k ? "\t" : "") << fields[k];
    out << '\n';
}

int cmd_build(const std::string& input, int tau, const std::string& output) {
    std::string text = read_file(input);
    if (text.empty()) {
        std::cerr << "error: " << input << " is empty\n";
        return kEmptyInput;
    }
    if (text.size() > static_cast<std::size_t>(subsel::kMaxTextLength)) {
        std::cerr << "error: input longer than 2^31 - 1 bytes\n";
        return kBadArguments;
    }
    const pos_t n = static_cast<pos_t>(text.size());
    tau = clamp_tau(tau, n);
    const auto start = Clock::now();
    const subsel::SubstringIndex index(std::move(text), tau);
    const double build = seconds_since(start);
    subsel::save_index_file(index, output);
    std::ifstream written(output, std::ios::binary | std::ios::ate);
    std::cout << "n\t" << n << "\ntau\t" << index.tau() << "\nbuild_seconds\t" << build << "\nbytes\t"
              << static_cast<long long>(written.tellg()) << "\n";
    return kOk;
}

int cmd_query(const std::string& path, const std::string& op, const std::vector<std::string>& numbers) {
    const auto index = subsel::load_index_file(path);
    std::vector<pos_t> args;
    for (const auto& token : numbers) args.push_back(parse_position(token));
    for (const auto& line : run_query(index, op, args)) print_fields(std::cout, line);
    return kOk;
}

int cmd_batch(const std::string& path, const std::string& ops_path) {
    const auto index = subsel::load_index_file(path);
    std::ifstream ops(ops_path);
    if (!ops) throw std::ios_base::failure("cannot open " + ops_path);
    std::string line;
    std::size_t number = 0;
    std::ostringstream out;
    while (std::getline(ops, line)) {
        ++number;
        std::istringstream fields(line);
        std::string op;
        if (!(fields >> op) || op[0] == '#') continue;
        std::vector<pos_t> args;
        std::string token;
        try {
            while (fields >> token) args.push_back(parse_position(token));
            for (const auto& result : run_query(index, op, args)) {
                out << op;
                for (pos_t a : args) out << '\t' << a;
                for (pos_t r : result) out << '\t' << r;
                out << '\n';
            }
        } catch (const UsageError& e) {
            std::cout << out.str();
            std::cerr << "error: line " << number << ": " << e.what() << "\n";
            return kBadArguments;
        }
    }
    std::cout << out.str();
    return kOk;
}

struct VerifyCounts {
    std::uint64_t texts = 0, checks = 0, failures = 0;
};

void verify_text(const std::string& t, std::mt19937_64& rng, VerifyCounts& counts) {
    const subsel::SubstringIndex index(t, 1 + static_cast<int>(rng() % 3));
    const pos_t n = index.size();
    auto check = [&](bool ok, const std::string& what) {
        ++counts.checks;
        if (!ok) {
            if (counts.failures < 20) std::cerr << "mismatch: " << what << " on \"" << t << "\"\n";
            ++counts.failures;
        }
    };
    for (pos_t j = 1; j <= n; ++j) {
        const auto mins = subsel::oracle::min_suffix_starts_ending_at(t, j);
        const auto maxs = subsel::oracle::max_suffix_starts_ending_at(t, j);
        subsel::oracle::for_each_sorted_suffixes_ending_at(t, j, [&](pos_t i, const std::vector<pos_t>& order) {
            const std::string at = " (" + std::to_string(i) + ", " + std::to_string(j) + ")";
            check(index.min_suffix(i, j).start == mins[static_cast<std::size_t>(i - 1)], "minsuf" + at);
            check(index.max_suffix(i, j).start == maxs[static_cast<std::size_t>(i - 1)], "maxsuf" + at);
            for (pos_t k = 1; k <= j - i + 1; ++k) {
                check(index.select(i, j, k).start == order[static_cast<std::size_t>(k - 1)], "select" + at + " k=" + std::to_string(k));
            }
            pos_t covered = 0;
            const auto factors = subsel::oracle::lyndon_factors(t, i, j);
            std::size_t next = 0;
            bool ok = true;
            for (const auto& run : index.lyndon(i, j)) {
                for (pos_t e = 0; e < run.exponent; ++e, ++next) {
                    ok = ok && next < factors.size() && factors[next].first == run.start + e * run.length &&
                         factors[next].second == run.length;
                    covered += run.length;
                }
            }
            check(ok && next == factors.size() && covered == j - i + 1, "lyndon" + at);
        });
    }
    for (int q = 0; q < 200; ++q) {
        const pos_t a = 1 + static_cast<pos_t>(rng() % n), b = a + static_cast<pos_t>(rng() % (n - a + 1));
        const pos_t c = 1 + static_cast<pos_t>(rng() % n), d = c + static_cast<pos_t>(rng() % (n - c + 1));
        check(subsel::flatten(index.prefix_suffix({a, b}, {c, d})) ==
                  subsel::oracle::borders(subsel::oracle::substring(t, a, b), subsel::oracle::substring(t, c, d)),
              "psq");
    }
    ++counts.texts;
}

int cmd_verify(int max_n, int seeds, const std::vector<int>& alphabets) {
    if (max_n < 1 || seeds < 1 || alphabets.empty()) throw UsageError("--max-n, --seeds and --alphabets must be positive");
    for (int sigma : alphabets) {
        if (sigma < 1 || sigma > 256) throw UsageError("alphabet sizes must lie in [1, 256]");
    }
    VerifyCounts counts;
    for (int seed = 1; seed <= seeds; ++seed) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        for (int sigma : alphabets) {
            const std::size_t n = 1 + rng() % static_cast<std::size_t>(max_n);
            std::string t(n, '\0');
            // Letters from 'a' while they fit, raw bytes beyond 26.
            const unsigned base = sigma <= 26 ? 'a' : 0;
            for (auto& ch : t) ch = static_cast<char>(base + rng() % static_cast<unsigned>(sigma));
            verify_text(t, rng, counts);
        }
    }
    std::cout << "texts\t" << counts.texts << "\nchecks\t" << counts.checks << "\nfailures\t" << counts.failures << "\n";
    return counts.failures == 0 ? kOk : kVerifyFailed;
}

struct Latency {
    std::string op;
    std::vector<double> micros;
};

void report(const Latency& l) {
    auto v = l.micros;
    std::sort(v.begin(), v.end());
    double mean = 0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    const double median = v[v.size() / 2];
    const double p99 = v[std::min(v.size() - 1, v.size() * 99 / 100)];
    std::printf("%s\tmean_us\t%.3f\tmedian_us\t%.3f\tp99_us\t%.3f\n", l.op.c_str(), mean, median, p99);
}

int cmd_bench(const std::string& path, int queries) {
    if (queries < 1) throw UsageError("--queries must be positive");
    const auto index = subsel::load_index_file(path);
    const pos_t n = index.size();
    std::mt19937_64 rng(12345);
    std::vector<Latency> results{{"minsuf", {}}, {"maxsuf", {}}, {"select", {}}, {"lyndon", {}}};
    std::uint64_t sink = 0;
    for (int q = 0; q < queries; ++q) {
        const pos_t i = 1 + static_cast<pos_t>(rng() % n), j = i + static_cast<pos_t>(rng() % (n - i + 1));
        const pos_t k = 1 + static_cast<pos_t>(rng() % (j - i + 1));
        auto timed = [&](Latency& slot, auto&& fn) {
            const auto start = Clock::now();
            sink += static_cast<std::uint64_t>(fn());
            slot.micros.push_back(seconds_since(start) * 1e6);
        };
        timed(results[0], [&] { return index.min_suffix(i, j).start; });
        timed(results[1], [&] { return index.max_suffix(i, j).start; });
        timed(results[2], [&] { return index.select(i, j, k).start; });
        timed(results[3], [&] { return static_cast<pos_t>(index.lyndon(i, j).size()); });
    }
    for (const auto& r : results) report(r);
    const auto start = Clock::now();
    const subsel::SubstringIndex rebuilt(std::string(index.text()), index.tau());
    const double build = seconds_since(start);
    std::printf("build\tseconds\t%.3f\tmb_per_second\t%.3f\n", build, static_cast<double>(n) / 1e6 / build);
    if (sink == 42) std::printf("\n");
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Substring suffix queries: minimal, maximal and k-th smallest suffix, Lyndon factorization"};
    app.require_subcommand(1);

    std::string input, output, index_path, ops_path, op;
    int tau = 1, max_n = 64, seeds = 4, queries = 1000;
    std::vector<std::string> numbers;
    std::vector<int> alphabets{2, 3, 4, 26};

    auto* build = app.add_subcommand("build", "Build an index file from a text file");
    build->add_option("--input", input, "Text file (raw bytes)")->required();
    build->add_option("--tau", tau, "Minimal-suffix trade-off, 1 to floor(log2 n)")->capture_default_str();
    build->add_option("--output", output, "Index file to write")->required();

    auto* query = app.add_subcommand("query", "Answer one query: minsuf i j | maxsuf i j | select i j k | lyndon i j | psq i j i2 j2");
    query->add_option("--index", index_path, "Index file")->required();
    query->add_option("op", op, "Operation")->required();
    query->add_option("numbers", numbers, "1-based inclusive positions");
    query->allow_extras(false);

    auto* batch = app.add_subcommand("batch", "Replay 'op numbers...' lines, one result per output line");
    batch->add_option("--index", index_path, "Index file")->required();
    batch->add_option("--ops", ops_path, "Query file")->required();

    auto* verify = app.add_subcommand("verify", "Compare all queries on random texts against brute force");
    verify->add_option("--max-n", max_n, "Largest text length")->capture_default_str();
    verify->add_option("--seeds", seeds, "Texts per alphabet")->capture_default_str();
    verify->add_option("--alphabets", alphabets, "Alphabet sizes")->delimiter(',')->capture_default_str();

    auto* bench = app.add_subcommand("bench", "Time random queries and a rebuild");
    bench->add_option("--index", index_path, "Index file")->required();
    bench->add_option("--queries", queries, "Queries per operation")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kBadArguments;
    }

    try {
        if (build->parsed()) return cmd_build(input, tau, output);
        if (query->parsed()) return cmd_query(index_path, op, numbers);
        if (batch->parsed()) return cmd_batch(index_path, ops_path);
        if (verify->parsed()) return cmd_verify(max_n, seeds, alphabets);
        if (bench->parsed()) return cmd_bench(index_path, queries);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArguments;
    } catch (const subsel::FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCorruptIndex;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadArguments;
    }
    return kOk;
}
