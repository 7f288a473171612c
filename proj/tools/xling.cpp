// xling: fit linear maps between word-embedding spaces, score cross-lingual
// sentence similarity, evaluate against gold judgments, and report hubness.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "xling/dictionary.hpp"
#include "xling/errors.hpp"
#include "xling/evaluate.hpp"
#include "xling/hubness.hpp"
#include "xling/idf.hpp"
#include "xling/ranking.hpp"
#include "xling/semantic_space.hpp"
#include "xling/sentence.hpp"
#include "xling/stats.hpp"
#include "xling/sts.hpp"
#include "xling/transforms.hpp"

namespace {

using json = nlohmann::json;

std::string format_score(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    return buf;
}

void write_manifest(const std::string& out_path, const json& manifest) {
    const std::string path = out_path + ".manifest.json";
    std::ofstream out(path);
    if (!out) throw xling::io_error("cannot write manifest: " + path);
    out << manifest.dump(2) << '\n';
    if (!out) throw xling::io_error("write failed: " + path);
}

xling::SemanticSpace load_space(const std::string& path, std::size_t max_vocab,
                                xling::LoadStats* stats) {
    xling::LoadOptions opts;
    opts.max_vocab = max_vocab;
    return preprocess_space(xling::SemanticSpace::load_file(path, opts, stats));
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw xling::io_error("cannot open for writing: " + path);
    return out;
}

xling::Distance parse_distance(const std::string& name) {
    if (name == "euclidean") return xling::Distance::Euclidean;
    if (name == "inverse-cosine") return xling::Distance::InverseCosine;
    throw xling::numeric_error("unknown distance: " + name);
}

// ---------------------------------------------------------------- align --

struct AlignArgs {
    std::string src_vectors, tgt_vectors, dict, method, out;
    int epochs = 5;
    int negatives = 50;
    double margin = 0.0;
    double lr = 0.01;
    std::string distance = "euclidean";
    std::uint64_t seed = 0;
    std::size_t max_vocab = 0;
    double ridge = xling::kAutoRidge;
};

int run_align(const AlignArgs& args) {
    xling::LoadStats src_stats, tgt_stats;
    const auto src = load_space(args.src_vectors, args.max_vocab, &src_stats);
    const auto tgt = load_space(args.tgt_vectors, args.max_vocab, &tgt_stats);
    const auto dict = xling::BilingualDictionary::load_file(args.dict);
    const auto train = xling::build_training_matrices(dict, src, tgt);

    const auto method = xling::method_from_name(args.method);
    if (!method) throw xling::numeric_error("unknown method: " + args.method);

    xling::RankingConfig config;
    config.margin = args.margin;
    config.negatives_per_side = args.negatives;
    config.epochs = args.epochs;
    config.learning_rate = args.lr;
    config.distance = parse_distance(args.distance);
    config.seed = args.seed;

    xling::AlignmentMatrix fit;
    switch (*method) {
        case xling::Method::LS: fit = xling::fit_least_squares(train.X, train.Y, args.ridge); break;
        case xling::Method::OT: fit = xling::fit_orthogonal(train.X, train.Y); break;
        case xling::Method::CCA: fit = xling::fit_cca(train.X, train.Y, args.ridge); break;
        case xling::Method::RT: fit = xling::fit_ranking(train.X, train.Y, config); break;
        case xling::Method::ORT:
            fit = xling::fit_orthogonal_ranking(train.X, train.Y, config);
            break;
    }
    xling::save_alignment_file(fit, args.out);

    json manifest{
        {"subcommand", "align"},
        {"inputs",
         {{"src_vectors", args.src_vectors},
          {"tgt_vectors", args.tgt_vectors},
          {"dictionary", args.dict}}},
        {"config",
         {{"method", args.method},
          {"epochs", args.epochs},
          {"negatives", args.negatives},
          {"margin", args.margin},
          {"learning_rate", args.lr},
          {"distance", args.distance},
          {"seed", args.seed},
          {"max_vocab", args.max_vocab},
          {"ridge", args.ridge}}},
        {"counts",
         {{"src_vocab", src.size()},
          {"src_duplicates_dropped", src_stats.duplicates_dropped},
          {"tgt_vocab", tgt.size()},
          {"tgt_duplicates_dropped", tgt_stats.duplicates_dropped},
          {"dict_pairs", dict.size()},
          {"pairs_used", static_cast<std::size_t>(train.X.rows())},
          {"pairs_dropped", train.dropped}}},
        {"fit",
         {{"method", std::string(xling::method_name(fit.method))},
          {"residual", fit.report.residual},
          {"orthogonality_defect", fit.report.orthogonality_defect},
          {"epoch_losses", fit.report.epoch_losses}}},
        {"output", args.out}};
    write_manifest(args.out, manifest);
    return 0;
}

// ------------------------------------------------------------- sts/eval --

struct StsArgs {
    std::string src_vectors, tgt_vectors, transform, pairs, out;
    std::string sts_method = "om";
    std::string weighting = "uniform";
    std::string idf_corpus_src, idf_corpus_tgt;
    int rank_r = 4;
    std::size_t max_vocab = 0;
    std::string gold; // eval only
};

struct ScoredPairs {
    std::vector<std::string> lines;          // per input line: score text or "NA"
    std::vector<double> scores;              // scored lines only
    std::vector<std::size_t> scored_indices; // input line index per score
    std::size_t lines_total = 0;
    std::size_t lines_na = 0;
    std::size_t fully_oov = 0;
    std::size_t oov_tokens_src = 0;
    std::size_t oov_tokens_tgt = 0;
};

// Validation that CLI11 cannot express declaratively; returns a usage
// message or nullopt.
std::optional<std::string> check_sts_args(const StsArgs& args) {
    if (args.weighting == "idf") {
        if (args.idf_corpus_src.empty())
            return "--weighting idf requires --idf-corpus-src";
        if (!args.tgt_vectors.empty() && args.idf_corpus_tgt.empty())
            return "--weighting idf with --tgt-vectors requires --idf-corpus-tgt";
    }
    return std::nullopt;
}

ScoredPairs score_pairs_file(const StsArgs& args, const xling::ScoringPipeline& pipeline) {
    std::ifstream in(args.pairs);
    if (!in) throw xling::io_error("cannot open pairs file: " + args.pairs);

    ScoredPairs out;
    std::string line;
    while (std::getline(in, line)) {
        ++out.lines_total;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            std::cerr << "warning: pairs line " << out.lines_total
                      << ": missing tab separator, scored as NA\n";
            out.lines.emplace_back("NA");
            ++out.lines_na;
            continue;
        }
        const xling::Sentence sx = xling::Sentence::parse(std::string_view(line).substr(0, tab));
        const xling::Sentence sy = xling::Sentence::parse(std::string_view(line).substr(tab + 1));
        if (sx.empty() || sy.empty()) {
            std::cerr << "warning: pairs line " << out.lines_total
                      << ": empty sentence, scored as NA\n";
            out.lines.emplace_back("NA");
            ++out.lines_na;
            continue;
        }
        const xling::SimilarityScore s = xling::score_sentence_pair(sx, sy, pipeline);
        if (s.used_x == 0 && s.used_y == 0) ++out.fully_oov;
        out.oov_tokens_src += s.oov_x;
        out.oov_tokens_tgt += s.oov_y;
        out.scored_indices.push_back(out.lines.size());
        out.scores.push_back(s.value);
        out.lines.push_back(format_score(s.value));
    }
    return out;
}

json sts_manifest(const StsArgs& args, const ScoredPairs& scored, const char* subcommand) {
    return json{
        {"subcommand", subcommand},
        {"inputs",
         {{"src_vectors", args.src_vectors},
          {"tgt_vectors", args.tgt_vectors.empty() ? json(nullptr) : json(args.tgt_vectors)},
          {"transform", args.transform.empty() ? json(nullptr) : json(args.transform)},
          {"pairs", args.pairs},
          {"idf_corpus_src",
           args.idf_corpus_src.empty() ? json(nullptr) : json(args.idf_corpus_src)},
          {"idf_corpus_tgt",
           args.idf_corpus_tgt.empty() ? json(nullptr) : json(args.idf_corpus_tgt)}}},
        {"config",
         {{"sts", args.sts_method},
          {"weighting", args.weighting},
          {"rank_r", args.rank_r},
          {"max_vocab", args.max_vocab}}},
        {"counts",
         {{"pairs_read", scored.lines_total},
          {"pairs_na", scored.lines_na},
          {"pairs_scored", scored.scores.size()},
          {"fully_oov_pairs", scored.fully_oov},
          {"oov_tokens_src", scored.oov_tokens_src},
          {"oov_tokens_tgt", scored.oov_tokens_tgt}}},
        {"output", args.out}};
}

int run_sts(const StsArgs& args, bool eval_mode) {
    if (auto usage = check_sts_args(args)) {
        std::cerr << "error: " << *usage << '\n';
        return 1;
    }

    const auto src = load_space(args.src_vectors, args.max_vocab, nullptr);
    std::optional<xling::SemanticSpace> tgt_storage;
    const xling::SemanticSpace* tgt = &src;
    if (!args.tgt_vectors.empty()) {
        tgt_storage = load_space(args.tgt_vectors, args.max_vocab, nullptr);
        tgt = &*tgt_storage;
    }

    std::optional<xling::AlignmentMatrix> transform;
    if (!args.transform.empty()) {
        transform = xling::load_alignment_file(args.transform);
        if (transform->dim() != src.dim() || transform->dim() != tgt->dim())
            throw xling::numeric_error("transform dimension " + std::to_string(transform->dim()) +
                                       " does not match the spaces");
    }

    xling::IdfWeights src_idf = xling::IdfWeights::uniform();
    xling::IdfWeights tgt_idf = xling::IdfWeights::uniform();
    if (args.weighting == "idf") {
        src_idf = xling::compute_idf_file(args.idf_corpus_src);
        tgt_idf = args.idf_corpus_tgt.empty() ? src_idf
                                              : xling::compute_idf_file(args.idf_corpus_tgt);
    }

    xling::ScoringPipeline pipeline;
    pipeline.src = &src;
    pipeline.tgt = tgt;
    pipeline.transform = transform ? &*transform : nullptr;
    pipeline.src_idf = &src_idf;
    pipeline.tgt_idf = &tgt_idf;
    const auto sts_method = xling::sts_method_from_name(args.sts_method);
    if (!sts_method) throw xling::numeric_error("unknown sts method: " + args.sts_method);
    pipeline.sts.method = *sts_method;
    pipeline.sts.pa_rank = args.rank_r;

    const ScoredPairs scored = score_pairs_file(args, pipeline);

    double pearson = 0.0;
    if (eval_mode) {
        std::ifstream gold_in(args.gold);
        if (!gold_in) throw xling::io_error("cannot open gold file: " + args.gold);
        std::vector<double> gold;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(gold_in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            double v = 0.0;
            const char* begin = line.data();
            const char* end = begin + line.size();
            auto [ptr, ec] = std::from_chars(begin, end, v);
            if (ec != std::errc{} || ptr != end)
                throw xling::io_error("gold file line " + std::to_string(line_no) +
                                      ": cannot parse '" + line + "'");
            gold.push_back(v);
        }
        if (gold.size() != scored.lines_total)
            throw xling::numeric_error("gold has " + std::to_string(gold.size()) +
                                       " lines but pairs file has " +
                                       std::to_string(scored.lines_total));
        std::vector<double> gold_scored;
        gold_scored.reserve(scored.scored_indices.size());
        for (const std::size_t idx : scored.scored_indices) gold_scored.push_back(gold[idx]);
        pearson = xling::pearson_correlation(scored.scores, gold_scored);
        std::printf("%.4f\n", pearson);
    }

    auto out = open_output(args.out);
    for (const auto& line : scored.lines) out << line << '\n';
    if (!out) throw xling::io_error("write failed: " + args.out);
    out.close();

    json manifest = sts_manifest(args, scored, eval_mode ? "eval" : "sts");
    if (eval_mode) {
        manifest["inputs"]["gold"] = args.gold;
        manifest["pearson"] = pearson;
    }
    write_manifest(args.out, manifest);
    return 0;
}

// -------------------------------------------------------------- hubness --

struct HubnessArgs {
    std::string vectors, src_vectors, tgt_vectors, transform, out;
    int k = 20;
    std::size_t query_limit = 0;
    std::size_t max_vocab = 0;
};

int run_hubness(const HubnessArgs& args) {
    const bool within = !args.vectors.empty();
    if (within == (!args.src_vectors.empty() || !args.tgt_vectors.empty())) {
        std::cerr << "error: pass either --vectors or --src-vectors with --tgt-vectors\n";
        return 1;
    }

    xling::HubnessReport report;
    const std::vector<std::string>* words = nullptr;
    std::optional<xling::SemanticSpace> space, src, tgt;

    if (within) {
        space = load_space(args.vectors, args.max_vocab, nullptr);
        report = xling::hubness_counts(space->vectors(), space->vectors(), args.k, true,
                                       args.query_limit);
        words = &space->vocab();
    } else {
        if (args.src_vectors.empty() || args.tgt_vectors.empty()) {
            std::cerr << "error: cross-lingual mode needs both --src-vectors and --tgt-vectors\n";
            return 1;
        }
        src = load_space(args.src_vectors, args.max_vocab, nullptr);
        tgt = load_space(args.tgt_vectors, args.max_vocab, nullptr);
        Eigen::MatrixXd queries = src->vectors();
        if (!args.transform.empty()) {
            const auto transform = xling::load_alignment_file(args.transform);
            queries = xling::apply_transform_rows(transform, queries);
        }
        report = xling::hubness_counts(queries, tgt->vectors(), args.k, false, args.query_limit);
        words = &tgt->vocab();
    }

    auto out = open_output(args.out);
    xling::save_hubness_tsv(report, *words, out);
    if (!out) throw xling::io_error("write failed: " + args.out);
    out.close();
    std::printf("%.6f\n", report.skew);

    json manifest{
        {"subcommand", "hubness"},
        {"inputs",
         {{"vectors", args.vectors.empty() ? json(nullptr) : json(args.vectors)},
          {"src_vectors", args.src_vectors.empty() ? json(nullptr) : json(args.src_vectors)},
          {"tgt_vectors", args.tgt_vectors.empty() ? json(nullptr) : json(args.tgt_vectors)},
          {"transform", args.transform.empty() ? json(nullptr) : json(args.transform)}}},
        {"config",
         {{"k", args.k},
          {"mode", within ? "within-space" : "cross-lingual"},
          {"query_limit", args.query_limit},
          {"max_vocab", args.max_vocab}}},
        {"skewness", report.skew},
        {"output", args.out}};
    write_manifest(args.out, manifest);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-lingual semantic space toolkit"};
    app.require_subcommand(1);

    AlignArgs align;
    CLI::App* align_cmd =
        app.add_subcommand("align", "fit a linear map between two spaces from a dictionary");
    align_cmd->add_option("--src-vectors", align.src_vectors, "source word vectors (text format)")
        ->required();
    align_cmd->add_option("--tgt-vectors", align.tgt_vectors, "target word vectors")->required();
    align_cmd->add_option("--dict", align.dict, "bilingual dictionary TSV")->required();
    align_cmd->add_option("--method", align.method, "ls|ot|cca|rt|ort")
        ->required()
        ->check(CLI::IsMember({"ls", "ot", "cca", "rt", "ort"}));
    align_cmd->add_option("--out", align.out, "output matrix file")->required();
    align_cmd->add_option("--epochs", align.epochs, "SGD epochs for rt/ort (default 5)");
    align_cmd->add_option("--negatives", align.negatives, "negatives per side (default 50)");
    align_cmd->add_option("--margin", align.margin, "hinge margin (default 0)");
    align_cmd->add_option("--lr", align.lr, "SGD learning rate (default 0.01)");
    align_cmd->add_option("--distance", align.distance, "euclidean|inverse-cosine")
        ->check(CLI::IsMember({"euclidean", "inverse-cosine"}));
    align_cmd->add_option("--seed", align.seed, "RNG seed (default 0)");
    align_cmd->add_option("--max-vocab", align.max_vocab, "vocabulary cap (0 = none)");
    align_cmd->add_option("--ridge", align.ridge,
                          "ridge for ls/cca; negative picks the scale-aware default");

    StsArgs sts;
    CLI::App* sts_cmd = app.add_subcommand("sts", "score sentence pairs");
    StsArgs eval;
    CLI::App* eval_cmd =
        app.add_subcommand("eval", "score sentence pairs and correlate against gold");
    for (auto& [cmd, a] : {std::pair{sts_cmd, &sts}, std::pair{eval_cmd, &eval}}) {
        cmd->add_option("--src-vectors", a->src_vectors, "source word vectors")->required();
        cmd->add_option("--tgt-vectors", a->tgt_vectors,
                        "target word vectors (absent = monolingual)");
        cmd->add_option("--transform", a->transform, "alignment matrix applied to the source side");
        cmd->add_option("--pairs", a->pairs, "TSV file, one \"sentX<TAB>sentY\" per line")
            ->required();
        cmd->add_option("--sts", a->sts_method, "lc|pa|om")
            ->required()
            ->check(CLI::IsMember({"lc", "pa", "om"}));
        cmd->add_option("--weighting", a->weighting, "uniform|idf (default uniform)")
            ->check(CLI::IsMember({"uniform", "idf"}));
        cmd->add_option("--idf-corpus-src", a->idf_corpus_src, "corpus for source idf weights");
        cmd->add_option("--idf-corpus-tgt", a->idf_corpus_tgt, "corpus for target idf weights");
        cmd->add_option("--rank-r", a->rank_r, "pa subspace rank (default 4)");
        cmd->add_option("--max-vocab", a->max_vocab, "vocabulary cap (0 = none)");
        cmd->add_option("--out", a->out, "output scores file, one per input line")->required();
    }
    eval_cmd->add_option("--gold", eval.gold, "gold judgments, one real per line")->required();

    HubnessArgs hub;
    CLI::App* hub_cmd = app.add_subcommand("hubness", "nearest-neighbor occurrence counts");
    hub_cmd->add_option("--vectors", hub.vectors, "word vectors for within-space mode");
    hub_cmd->add_option("--src-vectors", hub.src_vectors, "source vectors (cross-lingual mode)");
    hub_cmd->add_option("--tgt-vectors", hub.tgt_vectors, "target vectors (cross-lingual mode)");
    hub_cmd->add_option("--transform", hub.transform, "alignment matrix for the source side");
    hub_cmd->add_option("--k", hub.k, "neighborhood size (default 20)");
    hub_cmd->add_option("--query-limit", hub.query_limit, "scan only the first N query words");
    hub_cmd->add_option("--max-vocab", hub.max_vocab, "vocabulary cap (0 = none)");
    hub_cmd->add_option("--out", hub.out, "output TSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(align_cmd)) return run_align(align);
        if (app.got_subcommand(sts_cmd)) return run_sts(sts, false);
        if (app.got_subcommand(eval_cmd)) return run_sts(eval, true);
        if (app.got_subcommand(hub_cmd)) return run_hubness(hub);
    } catch (const xling::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const xling::numeric_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
