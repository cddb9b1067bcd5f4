// Command-line front end: construct/analyze/bound/simulate/oracle.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fdpc/construction.hpp"
#include "fdpc/decode_bec.hpp"
#include "fdpc/harness.hpp"
#include "fdpc/mlbounds.hpp"
#include "fdpc/weightdist.hpp"

namespace {

// "a:step:b" inclusive range or comma-separated list
std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> out;
    if (s.find(':') != std::string::npos) {
        double a, step, b;
        char c1, c2;
        std::istringstream ss(s);
        if (!(ss >> a >> c1 >> step >> c2 >> b) || c1 != ':' || c2 != ':' || step <= 0)
            throw CLI::ValidationError("--grid", "expected start:step:stop");
        for (double v = a; v <= b + step * 1e-9; v += step) out.push_back(v);
    } else {
        std::istringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    }
    if (out.empty()) throw CLI::ValidationError("--grid", "empty grid");
    return out;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    return file;
}

void print_spec_config(const fdpc::CodeSpec& spec) {
    std::fprintf(stderr, "# code: t=%u n=%u s=%u", spec.t, spec.n(), spec.s);
    for (std::size_t i = 0; i < spec.permSeeds.size(); ++i)
        std::fprintf(stderr, " perm_seed_%zu=%llu", i + 1,
                     static_cast<unsigned long long>(spec.permSeeds[i]));
    if (!spec.shortenedColumns.empty()) {
        std::fprintf(stderr, " shortened=");
        for (std::size_t i = 0; i < spec.shortenedColumns.size(); ++i)
            std::fprintf(stderr, "%s%u", i ? "," : "", spec.shortenedColumns[i]);
    }
    std::fprintf(stderr, "\n");
}

int cmd_construct(std::uint32_t t, std::uint32_t s, std::uint64_t seed, std::uint32_t shortenW4,
                  const std::string& outPrefix) {
    fdpc::CodeSpec spec;
    spec.t = t;
    spec.s = s;
    for (std::uint32_t i = 1; i < s; ++i)
        spec.permSeeds.push_back(fdpc::derive_seed(seed, i));
    if (shortenW4 > 0) spec = fdpc::shorten(spec, {{4, shortenW4}});

    auto h = fdpc::build_order_s(spec);
    std::uint32_t k = fdpc::code_dimension(h);
    auto w4 = fdpc::find_low_weight_codewords(h, 4);
    std::size_t numW4 = 0;
    for (auto& c : w4)
        if (c.weight() == 4) ++numW4;

    print_spec_config(spec);
    std::printf("n=%u k=%u r=%u weight4_codewords=%zu d_min_status=%s\n", h.cols, k, h.rows,
                numW4, numW4 == 0 ? "no_weight4_codeword (d_min >= 6)" : "has_weight4_codewords");

    fdpc::save_spec(spec, outPrefix + ".spec");
    fdpc::save_matrix(h, outPrefix + ".pcm");
    std::fprintf(stderr, "# wrote %s.spec and %s.pcm\n", outPrefix.c_str(), outPrefix.c_str());
    return 0;
}

int cmd_analyze(const std::string& specFile, const std::string& mode, std::uint32_t wmax,
                const std::string& outPath) {
    auto spec = fdpc::load_spec(specFile);
    print_spec_config(spec);
    std::ofstream file;
    auto& os = open_out(file, outPath);

    fdpc::WeightSpectrum s;
    if (mode == "ensemble") {
        s = fdpc::ensemble_average_spectrum(spec.t, wmax);
    } else if (mode == "bound") {
        for (std::uint32_t w = 4; w <= wmax; w += 2)
            s.set(w, fdpc::BigRat(fdpc::weight_upper_bound(spec.t, w)),
                  fdpc::WeightKind::UpperBound);
    } else if (mode == "bound-improved") {
        for (std::uint32_t w = 4; w <= wmax; w += 2)
            s.set(w, fdpc::BigRat(fdpc::improved_weight_upper_bound(spec.t, w)),
                  fdpc::WeightKind::UpperBound);
    } else if (mode == "irreducible") {
        for (std::uint32_t w = 4; w <= wmax; w += 2)
            s.set(w, fdpc::BigRat(fdpc::irreducible_count(spec.t, w)), fdpc::WeightKind::Exact);
    } else {
        throw CLI::ValidationError("--mode", "expected ensemble|bound|bound-improved|irreducible");
    }
    fdpc::write_spectrum_csv(os, s);
    return 0;
}

int cmd_oracle(const std::string& specFile, const std::string& outPath) {
    auto spec = fdpc::load_spec(specFile);
    print_spec_config(spec);
    auto h = fdpc::build_order_s(spec);
    auto s = fdpc::enumerate_exhaustive(h);
    std::ofstream file;
    auto& os = open_out(file, outPath);
    fdpc::write_spectrum_csv(os, s);
    return 0;
}

int cmd_bound(const std::string& specFile, const std::string& channel, const std::string& grid,
              std::uint32_t wt, std::uint32_t d, std::uint32_t alpha4, const std::string& outPath) {
    auto spec = fdpc::load_spec(specFile);
    bool bec = channel == "bec";
    if (!bec && channel != "awgn") throw CLI::ValidationError("--channel", "expected bec|awgn");
    if (wt == 0) wt = bec ? 20 : 30;

    auto h = fdpc::build_order_s(spec);
    std::uint32_t k = fdpc::code_dimension(h);
    double rate = static_cast<double>(k) / h.cols;
    print_spec_config(spec);
    std::fprintf(stderr, "# bound: channel=%s wt=%u d=%u alpha4=%u rate=%.6f (k=%u, n=%u)\n",
                 channel.c_str(), wt, d, alpha4, rate, k, h.cols);

    auto avg = fdpc::ensemble_average_spectrum(spec.t, wt);
    fdpc::BoundConfig cfg;
    cfg.wt = wt;
    cfg.d = d;
    cfg.alphas = {{4, alpha4}};

    std::ofstream file;
    auto& os = open_out(file, outPath);
    os << "channel_param,bound_value\n";
    char buf[96];
    for (double p : parse_grid(grid)) {
        cfg.channelParam = bec ? p : fdpc::snr_db_to_sigma(p, rate);
        double b = bec ? fdpc::ensemble_bound_bec(cfg, avg) : fdpc::ensemble_bound_awgn(cfg, avg);
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p, b);
        os << buf;
    }
    return 0;
}

int cmd_simulate(const std::string& specFile, const std::string& channel, const std::string& grid,
                 const std::string& decoder, std::uint64_t trials, std::uint64_t seed,
                 std::uint64_t stopEarly, std::uint32_t threads, std::uint32_t maxList,
                 std::uint32_t lambdaIt, const fdpc::SoftConfig& soft, const std::string& outPath) {
    fdpc::SimConfig cfg;
    cfg.codeSpec = fdpc::load_spec(specFile);
    cfg.grid = parse_grid(grid);
    cfg.trials = trials;
    cfg.masterSeed = seed;
    cfg.stopEarlyErrors = stopEarly;
    cfg.threads = threads;

    if (channel == "bec") {
        cfg.channel = fdpc::ChannelKind::Bec;
        if (decoder == "mppl")
            cfg.decoder.kind = fdpc::DecoderKind::BecMppl;
        else if (decoder == "ml-oracle")
            cfg.decoder.kind = fdpc::DecoderKind::BecMlOracle;
        else
            throw CLI::ValidationError("--decoder", "bec expects mppl|ml-oracle");
    } else if (channel == "awgn") {
        cfg.channel = fdpc::ChannelKind::Awgn;
        if (decoder != "mppl" && decoder != "minsum")
            throw CLI::ValidationError("--decoder", "awgn expects mppl|minsum");
        cfg.decoder.kind = fdpc::DecoderKind::SoftMppl;
        cfg.decoder.soft = soft;
        if (decoder == "minsum") {
            cfg.decoder.soft.maxList = 1;
            cfg.decoder.soft.maxStages = 1;
        }
    } else {
        throw CLI::ValidationError("--channel", "expected bec|awgn");
    }
    cfg.decoder.maxList = maxList;
    cfg.decoder.lambdaIt = lambdaIt;

    fdpc::SimRunner runner(cfg);
    print_spec_config(cfg.codeSpec);
    std::fprintf(stderr,
                 "# simulate: channel=%s decoder=%s trials=%llu seed=%llu stop_early=%llu "
                 "threads=%u max_list=%u lambda_it=%u beta=%g iters_per_stage=%u max_stages=%u "
                 "soft_max_list=%u check_every_iteration=%d k=%u n=%u\n",
                 channel.c_str(), decoder.c_str(), static_cast<unsigned long long>(trials),
                 static_cast<unsigned long long>(seed), static_cast<unsigned long long>(stopEarly),
                 threads, maxList, lambdaIt, cfg.decoder.soft.beta, cfg.decoder.soft.itersPerStage,
                 cfg.decoder.soft.maxStages, cfg.decoder.soft.maxList,
                 static_cast<int>(cfg.decoder.soft.checkEveryIteration), runner.encoder().k(),
                 runner.matrix().cols);

    std::ofstream file;
    auto& os = open_out(file, outPath);
    fdpc::write_sim_csv_header(os);
    for (double p : cfg.grid) {
        auto rec = runner.run_point(p);
        fdpc::write_sim_csv_row(os, rec);
        os.flush();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair-density parity-check code toolkit"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a code and write .spec/.pcm files");
    std::uint32_t t = 2, s = 1, shortenW4 = 0;
    std::uint64_t seed = 1;
    std::string outPrefix = "fdpc_code";
    construct->add_option("--t", t, "base parameter t >= 2 (n = 4t^2)")->required();
    construct->add_option("--s", s, "stacking order >= 1");
    construct->add_option("--seed", seed, "seed for the column permutations");
    construct->add_option("--shorten-w4", shortenW4, "columns to shorten targeting weight-4 codewords");
    construct->add_option("--out", outPrefix, "output path prefix");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "closed-form weight spectrum (CSV)");
    std::string specFile, mode = "ensemble", outPath;
    std::uint32_t wmax = 20;
    analyze->add_option("--spec", specFile, "code spec file")->required();
    analyze->add_option("--mode", mode, "ensemble|bound|bound-improved|irreducible");
    analyze->add_option("--wmax", wmax, "largest weight to report");
    analyze->add_option("--out", outPath, "output CSV (default stdout)");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exhaustive weight spectrum for small codes (CSV)");
    std::string oSpecFile, oOutPath;
    oracle->add_option("--spec", oSpecFile, "code spec file")->required();
    oracle->add_option("--out", oOutPath, "output CSV (default stdout)");

    // bound
    auto* bound = app.add_subcommand("bound", "shortened-ensemble ML bound curve (CSV)");
    std::string bSpec, bChannel = "bec", bGrid, bOut;
    std::uint32_t bWt = 0, bD = 3, bAlpha4 = 1;
    bound->add_option("--spec", bSpec, "code spec file")->required();
    bound->add_option("--channel", bChannel, "bec|awgn");
    bound->add_option("--grid", bGrid, "eps or SNR grid: start:step:stop or comma list")->required();
    bound->add_option("--wt", bWt, "truncation weight (default 20 bec / 30 awgn)");
    bound->add_option("--d", bD, "half target minimum distance (d_min >= 2d)");
    bound->add_option("--alpha4", bAlpha4, "shortened bits at weight 4");
    bound->add_option("--out", bOut, "output CSV (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo BLER/BER curves (CSV)");
    std::string mSpec, mChannel = "bec", mGrid, mDecoder = "mppl", mOut;
    std::uint64_t mTrials = 10000, mSeed = 1, mStop = 200;
    std::uint32_t mThreads = 0, mMaxList = 1024, mLambdaIt = 4;
    fdpc::SoftConfig soft;
    simulate->add_option("--spec", mSpec, "code spec file")->required();
    simulate->add_option("--channel", mChannel, "bec|awgn");
    simulate->add_option("--grid", mGrid, "eps or SNR-dB grid")->required();
    simulate->add_option("--decoder", mDecoder, "bec: mppl|ml-oracle; awgn: mppl|minsum");
    simulate->add_option("--trials", mTrials, "trials per grid point")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", mSeed, "master seed");
    simulate->add_option("--stop-early", mStop, "stop a point after this many block errors (0 = off)");
    simulate->add_option("--threads", mThreads, "worker threads (0 = hardware)");
    simulate->add_option("--max-list", mMaxList, "BEC MP-PL list cap (power of two)");
    simulate->add_option("--lambda-it", mLambdaIt, "BEC MP iterations per stage");
    simulate->add_option("--beta", soft.beta, "min-sum scaling constant");
    simulate->add_option("--iters-per-stage", soft.itersPerStage, "soft iterations per stage");
    simulate->add_option("--max-stages", soft.maxStages, "soft stage cap");
    simulate->add_option("--soft-max-list", soft.maxList, "soft list cap");
    simulate->add_flag("--check-stage-end-only", "parity test only at stage ends");
    simulate->add_option("--out", mOut, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (construct->parsed()) return cmd_construct(t, s, seed, shortenW4, outPrefix);
        if (analyze->parsed()) return cmd_analyze(specFile, mode, wmax, outPath);
        if (oracle->parsed()) return cmd_oracle(oSpecFile, oOutPath);
        if (bound->parsed()) return cmd_bound(bSpec, bChannel, bGrid, bWt, bD, bAlpha4, bOut);
        if (simulate->parsed()) {
            soft.checkEveryIteration = simulate->count("--check-stage-end-only") == 0;
            return cmd_simulate(mSpec, mChannel, mGrid, mDecoder, mTrials, mSeed, mStop, mThreads,
                                mMaxList, mLambdaIt, soft, mOut);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
