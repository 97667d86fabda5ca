#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "bgray/counting.hpp"
#include "bgray/oracle.hpp"
#include "bgray/partition.hpp"
#include "bgray/ranking.hpp"
#include "bgray/selftest.hpp"
#include "bgray/stepper.hpp"

namespace {

using bgray::BinaryPartition;
using bgray::GrayCursor;
using bgray::Move;
using bgray::StepDirection;
using json = nlohmann::ordered_json;

// Above this size the trace index column defaults to "-" instead of being
// ranked (ranking needs the full count table up to the size).
constexpr std::uint64_t kAutoIndexMaxSize = 100000;

struct EmitContext {
    bool jsonl = false;
};

void emit_partition(const EmitContext& ctx, const std::string& text) {
    if (ctx.jsonl) {
        json rec;
        rec["partition"] = text;
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << text << '\n';
    }
}

void emit_indexed(const EmitContext& ctx, const mpz_class& index, const std::string& partition) {
    if (ctx.jsonl) {
        json rec;
        rec["index"] = index.get_str();
        rec["partition"] = partition;
        std::cout << rec.dump() << '\n';
    } else {
        std::cout << partition << '\n';
    }
}

// One trace row: the state after a step (or the start state, with no move).
void emit_trace(const EmitContext& ctx, const GrayCursor& cursor, const Move* move) {
    std::string partition = cursor.partition().str();
    if (ctx.jsonl) {
        json rec;
        if (cursor.index())
            rec["index"] = cursor.index()->get_str();
        rec["partition"] = partition;
        rec["epsilon"] = cursor.epsilon();
        if (move) {
            rec["rule"] = std::string(1, bgray::rule_char(move->rule));
            rec["action"] = move->action == bgray::MoveAction::merge ? "merge" : "split";
            rec["level"] = move->level;
        }
        std::cout << rec.dump() << '\n';
        return;
    }
    std::cout << (cursor.index() ? cursor.index()->get_str() : "-") << ' ' << partition << ' '
              << (cursor.epsilon() > 0 ? "+1" : "-1");
    if (move)
        std::cout << ' ' << bgray::rule_char(move->rule) << ' '
                  << (move->action == bgray::MoveAction::merge ? "merge" : "split") << ' '
                  << move->level;
    else
        std::cout << " - - -";
    std::cout << '\n';
}

BinaryPartition parse_for_stepping(const std::string& text) {
    BinaryPartition p = BinaryPartition::parse(text);
    if (p.size() > (mpz_class(1) << 62))
        throw std::domain_error("partition too large for stepping (size > 2^62)");
    return p;
}

// 0 = auto, 1 = forced on, -1 = forced off.
void run_steps(const EmitContext& ctx, const std::string& start, std::uint64_t steps,
               bool trace, int index_mode, StepDirection dir) {
    BinaryPartition p = parse_for_stepping(start);
    GrayCursor cursor(p);
    if (trace) {
        bool with_index =
            index_mode > 0 || (index_mode == 0 && p.size() <= kAutoIndexMaxSize);
        if (with_index)
            cursor.set_index(bgray::rank(p));
        emit_trace(ctx, cursor, nullptr);
    }
    for (std::uint64_t s = 0; s < steps; ++s) {
        Move move = cursor.step(dir);
        if (trace)
            emit_trace(ctx, cursor, &move);
    }
    if (!trace)
        emit_partition(ctx, cursor.partition().str());
}

mpz_class parse_index(const std::string& text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("index must be a decimal integer");
    return mpz_class(text, 10);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray sequence of binary partitions: every neighboring pair of"
                 " partitions differs by one move 2^k+2^k <-> 2^(k+1).  Terms are"
                 " 1-based; term 1 is the empty partition, written \"-\"."};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();

    int exit_code = 0;
    EmitContext ctx;
    auto sync_ctx = [&]() { ctx.jsonl = (format == "jsonl"); };

    // count
    std::uint64_t count_n = 0;
    auto* cmd_count = app.add_subcommand("count", "Print b(n), the number of binary partitions of n");
    cmd_count->add_option("n", count_n, "Target size")->required();
    cmd_count->callback([&] {
        sync_ctx();
        std::cout << bgray::bpc(count_n).get_str() << '\n';
    });

    // list
    std::uint64_t list_n = 0;
    bool list_pad = false;
    auto* cmd_list = app.add_subcommand("list", "Print the Gray sequence of all binary partitions of n");
    cmd_list->add_option("n", list_n, "Target size")->required();
    cmd_list->add_flag("--pad", list_pad, "Show parts of size 1 as an explicit 1^m suffix");
    cmd_list->callback([&] {
        sync_ctx();
        for (const auto& pp : bgray::gray_B_n(list_n))
            emit_partition(ctx, pp.str(list_pad));
    });

    // seq
    std::uint64_t seq_limit = 0;
    auto* cmd_seq = app.add_subcommand("seq", "Print terms 1..K of the infinite sequence of even binary partitions");
    cmd_seq->add_option("--limit", seq_limit, "Number of terms")->required()->check(CLI::PositiveNumber);
    cmd_seq->callback([&] {
        sync_ctx();
        bgray::gray_prefix_visit(seq_limit, [&](std::uint64_t index, const BinaryPartition& p) {
            emit_indexed(ctx, mpz_class(index), p.str());
        });
    });

    // next / prev / walk
    struct StepArgs {
        std::string partition;
        std::uint64_t steps = 1;
        bool trace = false;
        bool index_on = false;
        bool index_off = false;
        int index_mode() const { return index_on ? 1 : (index_off ? -1 : 0); }
    };
    StepArgs next_args, prev_args, walk_args;
    auto add_step_options = [](CLI::App* cmd, StepArgs& args, bool walk) {
        cmd->add_option("partition", args.partition, "Start partition (canonical text, quoted)")
            ->required();
        auto* steps = cmd->add_option("--steps", args.steps, "Number of steps");
        if (walk)
            steps->required();
        else
            steps->capture_default_str();
        auto* trace = cmd->add_flag("--trace", args.trace, "Print one trace record per step");
        if (walk)
            trace->description("Implied; walk always traces");
        auto* on = cmd->add_flag("--index", args.index_on, "Force the trace index column on");
        auto* off = cmd->add_flag("--no-index", args.index_off, "Force the trace index column off");
        on->excludes(off);
        off->excludes(on);
    };
    auto* cmd_next = app.add_subcommand("next", "Step forward");
    add_step_options(cmd_next, next_args, false);
    cmd_next->callback([&] {
        sync_ctx();
        run_steps(ctx, next_args.partition, next_args.steps, next_args.trace,
                  next_args.index_mode(), StepDirection::forward);
    });
    auto* cmd_prev = app.add_subcommand("prev", "Step backward");
    add_step_options(cmd_prev, prev_args, false);
    cmd_prev->callback([&] {
        sync_ctx();
        run_steps(ctx, prev_args.partition, prev_args.steps, prev_args.trace,
                  prev_args.index_mode(), StepDirection::backward);
    });
    auto* cmd_walk = app.add_subcommand("walk", "Step forward with a trace record per step");
    add_step_options(cmd_walk, walk_args, true);
    cmd_walk->callback([&] {
        sync_ctx();
        run_steps(ctx, walk_args.partition, walk_args.steps, /*trace=*/true,
                  walk_args.index_mode(), StepDirection::forward);
    });

    // rank / unrank / trail
    std::string rank_partition;
    auto* cmd_rank = app.add_subcommand("rank", "Print the 1-based position of a partition");
    cmd_rank->add_option("partition", rank_partition, "Partition (canonical text, quoted)")->required();
    cmd_rank->callback([&] {
        sync_ctx();
        BinaryPartition p = BinaryPartition::parse(rank_partition);
        mpz_class k = bgray::rank(p);
        if (ctx.jsonl)
            emit_indexed(ctx, k, p.str());
        else
            std::cout << k.get_str() << '\n';
    });

    std::string unrank_index;
    auto* cmd_unrank = app.add_subcommand("unrank", "Print the partition at a 1-based position");
    cmd_unrank->add_option("k", unrank_index, "Position (decimal, any length)")->required();
    cmd_unrank->callback([&] {
        sync_ctx();
        mpz_class k = parse_index(unrank_index);
        emit_indexed(ctx, k, bgray::unrank(k).str());
    });

    std::string trail_partition;
    auto* cmd_trail = app.add_subcommand("trail", "Print the sizes under repeated halve-and-drop-1s, comma-separated");
    cmd_trail->add_option("partition", trail_partition, "Partition (canonical text, quoted)")->required();
    cmd_trail->callback([&] {
        sync_ctx();
        bgray::Trail t = bgray::trail_of(BinaryPartition::parse(trail_partition));
        if (t.taus.empty()) {
            std::cout << "-\n";
            return;
        }
        std::string line;
        for (const auto& tau : t.taus) {
            if (!line.empty())
                line += ',';
            line += tau.get_str();
        }
        std::cout << line << '\n';
    });

    // selftest
    std::uint64_t selftest_max_n = 64;
    auto* cmd_selftest = app.add_subcommand("selftest", "Run the cross-module invariant suite");
    cmd_selftest->add_option("--max-n", selftest_max_n, "Largest partition size exercised")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmd_selftest->callback([&] {
        sync_ctx();
        bgray::SelftestResult result = bgray::run_selftest(selftest_max_n, std::cout);
        std::cout << (result.ok() ? "selftest passed" : "selftest FAILED") << " ("
                  << result.checks << " checks, " << result.failures << " failures)\n";
        if (!result.ok())
            exit_code = 2;
    });

    // bench
    std::uint64_t bench_steps = 0;
    std::string bench_start = "-";
    auto* cmd_bench = app.add_subcommand("bench", "Time the loopless stepper");
    cmd_bench->add_option("--steps", bench_steps, "Number of forward steps")
        ->required()
        ->check(CLI::PositiveNumber);
    cmd_bench->add_option("--start", bench_start, "Start partition")->capture_default_str();
    cmd_bench->callback([&] {
        sync_ctx();
        GrayCursor cursor(parse_for_stepping(bench_start));
        auto t0 = std::chrono::steady_clock::now();
        for (std::uint64_t s = 0; s < bench_steps; ++s)
            cursor.step(StepDirection::forward);
        auto t1 = std::chrono::steady_clock::now();
        double seconds = std::chrono::duration<double>(t1 - t0).count();
        std::cout << "steps=" << bench_steps << " seconds=" << seconds << " steps_per_sec="
                  << static_cast<std::uint64_t>(seconds > 0 ? bench_steps / seconds : 0)
                  << " max_node_touches=" << cursor.max_step_touches() << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
