#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctsum/errors.hpp"
#include "ctsum/keywords.hpp"
#include "ctsum/pipeline.hpp"
#include "ctsum/rouge.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitResource = 1;  // bad files, bad config, I/O failure
constexpr int kExitEmpty = 2;     // nothing to score / empty result

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ctsum::ConfigError("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Config file: same key-value dialect as the stats file, one
// "key value" pair per line. Flags given on the command line win.
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::map<std::string, std::string> out;
    std::istringstream in(read_file(path));
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto sp = line.find(' ');
        if (sp == std::string::npos)
            throw ctsum::ParseError("config line " + std::to_string(lineno) +
                                    ": expected 'key value'");
        out[line.substr(0, sp)] = line.substr(sp + 1);
    }
    return out;
}

struct CommonOptions {
    std::string stats_path;
    std::string embeddings_path;
    std::string stopwords_path;
    std::string config_path;
    std::size_t k = 10;
    double ratio = 0.25;
    std::string count_mode = "content";
    std::string budget_mode = "words";
    std::uint64_t seed = 0;
    bool no_case_fold = false;
};

void add_resource_options(CLI::App* cmd, CommonOptions& opt, bool with_summary_knobs) {
    cmd->add_option("--stats", opt.stats_path, "Corpus stats file");
    cmd->add_option("--embeddings", opt.embeddings_path, "Word embedding file (text vector format)");
    cmd->add_option("--stopwords", opt.stopwords_path, "Stopword list (one word per line)");
    cmd->add_option("--config", opt.config_path, "Config file (key value lines)");
    cmd->add_option("-k,--keywords", opt.k, "Number of keywords / concept clusters")
        ->default_val("10");
    cmd->add_flag("--no-case-fold", opt.no_case_fold, "Disable case folding");
    if (with_summary_knobs) {
        cmd->add_option("--ratio", opt.ratio, "Compression ratio in (0, 1]")->default_val("0.25");
        cmd->add_option("--count-mode", opt.count_mode, "Sentence-length denominator: content|all")
            ->default_val("content");
        cmd->add_option("--budget-mode", opt.budget_mode, "Summary budget unit: words|sentences")
            ->default_val("words");
        cmd->add_option("--seed", opt.seed, "Seed for randomized fallbacks")->default_val("0");
    }
}

// Flags > config file > defaults.
void apply_config_file(const CLI::App* cmd, CommonOptions& opt) {
    if (opt.config_path.empty()) return;
    const auto cfg = read_config_file(opt.config_path);
    auto fill = [&](const char* flag, const char* key, auto& target) {
        const auto* o = cmd->get_option_no_throw(flag);
        auto it = cfg.find(key);
        if (it == cfg.end()) return;
        if (o && o->count() > 0) return;
        std::istringstream is(it->second);
        if constexpr (std::is_same_v<std::decay_t<decltype(target)>, std::string>) {
            target = it->second;
        } else {
            if (!(is >> target))
                throw ctsum::ConfigError(std::string("config: bad value for ") + key);
        }
    };
    fill("--stats", "stats", opt.stats_path);
    fill("--embeddings", "embeddings", opt.embeddings_path);
    fill("--stopwords", "stopwords", opt.stopwords_path);
    fill("--keywords", "k", opt.k);
    fill("--ratio", "ratio", opt.ratio);
    fill("--count-mode", "count_mode", opt.count_mode);
    fill("--budget-mode", "budget_mode", opt.budget_mode);
    fill("--seed", "seed", opt.seed);
}

ctsum::PipelineConfig make_pipeline_config(const CommonOptions& opt) {
    ctsum::PipelineConfig cfg;
    cfg.k = opt.k;
    cfg.ratio = opt.ratio;
    cfg.seed = opt.seed;
    cfg.tokenizer.case_fold = !opt.no_case_fold;
    if (opt.count_mode == "content")
        cfg.count_mode = ctsum::CountMode::Content;
    else if (opt.count_mode == "all")
        cfg.count_mode = ctsum::CountMode::All;
    else
        throw ctsum::ConfigError("count-mode must be 'content' or 'all'");
    if (opt.budget_mode == "words")
        cfg.budget_mode = ctsum::BudgetMode::Words;
    else if (opt.budget_mode == "sentences")
        cfg.budget_mode = ctsum::BudgetMode::Sentences;
    else
        throw ctsum::ConfigError("budget-mode must be 'words' or 'sentences'");
    return cfg;
}

struct Resources {
    ctsum::CorpusStats stats;
    ctsum::EmbeddingTable table;
    ctsum::StopwordSet stops;
};

Resources load_resources(const CommonOptions& opt, const ctsum::TokenizerConfig& tok) {
    if (opt.stats_path.empty()) throw ctsum::ConfigError("--stats is required");
    if (opt.embeddings_path.empty()) throw ctsum::ConfigError("--embeddings is required");
    Resources r;
    r.stats = ctsum::load_stats(opt.stats_path);
    r.table = ctsum::load_embeddings(opt.embeddings_path);
    if (!opt.stopwords_path.empty()) r.stops = ctsum::load_stopwords(opt.stopwords_path, tok);
    return r;
}

std::vector<fs::path> sorted_regular_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ctsum::ConfigError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file()) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_build_stats(const std::string& corpus_dir, const std::string& out_path, bool no_fold) {
    ctsum::TokenizerConfig tok;
    tok.case_fold = !no_fold;
    std::vector<std::string> docs;
    for (const auto& p : sorted_regular_files(corpus_dir)) docs.push_back(read_file(p.string()));
    const auto stats = ctsum::build_stats(docs, tok);
    ctsum::save_stats(stats, out_path);
    std::cout << "docs " << stats.doc_count << " vocab " << stats.doc_freq.size() << "\n";
    return kExitOk;
}

int cmd_stopwords(const std::string& stats_path, std::size_t count) {
    const auto stats = ctsum::load_stats(stats_path);
    for (const auto& w : ctsum::top_frequent(stats, count)) std::cout << w << "\n";
    return kExitOk;
}

int cmd_keywords(const std::string& doc_path, const CommonOptions& opt) {
    const auto cfg = make_pipeline_config(opt);
    const auto res = load_resources(opt, cfg.tokenizer);
    const auto text = read_file(doc_path);
    const auto tokens = ctsum::tokenize_words(text, cfg.tokenizer);
    const auto scores =
        ctsum::score_words(tokens, res.stats, ctsum::normalize(res.table), res.stops);
    std::cout << "rank\tterm\ttf\tidf\tpoint\n";
    std::size_t rank = 1;
    for (const auto& s : scores)
        std::cout << rank++ << "\t" << s.term << "\t" << s.tf << "\t" << s.idf << "\t" << s.point
                  << "\n";
    return kExitOk;
}

int cmd_concepts(const std::string& doc_path, const CommonOptions& opt, bool as_json) {
    const auto cfg = make_pipeline_config(opt);
    const auto res = load_resources(opt, cfg.tokenizer);
    const auto result =
        ctsum::summarize_document(read_file(doc_path), res.stats, res.table, res.stops, cfg);
    if (as_json) {
        json out = json::array();
        for (const auto& c : result.concepts) {
            json members = json::object();
            std::map<std::string, double> points;
            for (const auto& s : result.keyword_scores) points[s.term] = s.point;
            for (const auto& m : c.members)
                members[m] = {{"point", points.at(m)}, {"nearness", c.nearness.at(m)}};
            out.push_back({{"id", c.id},
                           {"criterion_word", c.criterion_word},
                           {"score", c.score},
                           {"members", members}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::map<std::string, double> points;
        for (const auto& s : result.keyword_scores) points[s.term] = s.point;
        std::cout << "concept\tcriterion\tscore\tmember\tpoint\tnearness\n";
        for (const auto& c : result.concepts)
            for (const auto& m : c.members)
                std::cout << c.id << "\t" << c.criterion_word << "\t" << c.score << "\t" << m
                          << "\t" << points.at(m) << "\t" << c.nearness.at(m) << "\n";
    }
    return kExitOk;
}

int cmd_summarize(const std::string& doc_path, const CommonOptions& opt,
                  const std::string& trace_path, const std::string& explain_path) {
    const auto cfg = make_pipeline_config(opt);
    const auto res = load_resources(opt, cfg.tokenizer);
    const auto result =
        ctsum::summarize_document(read_file(doc_path), res.stats, res.table, res.stops, cfg);
    std::cout << result.summary_text;
    if (!trace_path.empty()) {
        std::ofstream trace(trace_path, std::ios::binary);
        if (!trace) throw ctsum::ConfigError("cannot write trace file: " + trace_path);
        trace << "rank\tsentence\tscore\tword_count\n";
        std::size_t rank = 1;
        for (const auto& s : result.ranked)
            trace << rank++ << "\t" << s.sentence.index << "\t" << s.score << "\t" << s.word_count
                  << "\n";
    }
    if (!explain_path.empty()) {
        std::ofstream explain(explain_path, std::ios::binary);
        if (!explain) throw ctsum::ConfigError("cannot write explain file: " + explain_path);
        explain << "concept\tcriterion\tscore\tmembers\n";
        for (const auto& c : result.concepts) {
            explain << c.id << "\t" << c.criterion_word << "\t" << c.score << "\t";
            for (std::size_t i = 0; i < c.members.size(); ++i)
                explain << (i ? "," : "") << c.members[i];
            explain << "\n";
        }
    }
    return kExitOk;
}

int cmd_evaluate(const std::string& system_dir, const std::string& refs_dir,
                 const std::vector<std::size_t>& n_values, const std::string& agg_name,
                 bool no_fold) {
    ctsum::TokenizerConfig tok;
    tok.case_fold = !no_fold;
    ctsum::RougeAgg agg;
    if (agg_name == "mean")
        agg = ctsum::RougeAgg::Mean;
    else if (agg_name == "max")
        agg = ctsum::RougeAgg::Max;
    else
        throw ctsum::ConfigError("--agg must be 'mean' or 'max'");

    auto tokens_of = [&](const fs::path& p) {
        std::vector<std::string> toks;
        for (const auto& t : ctsum::tokenize_words(read_file(p.string()), tok))
            toks.push_back(t.surface);
        return toks;
    };

    std::vector<ctsum::EvalPair> pairs;
    std::vector<std::string> missing;
    for (const auto& sys_file : sorted_regular_files(system_dir)) {
        if (sys_file.extension() != ".txt") continue;
        const auto stem = sys_file.stem().string();
        ctsum::EvalPair pair;
        pair.system = tokens_of(sys_file);
        for (const auto& ref_file : sorted_regular_files(refs_dir)) {
            const auto name = ref_file.filename().string();
            if (name.rfind(stem + ".ref", 0) == 0 && ref_file.extension() == ".txt")
                pair.references.push_back(tokens_of(ref_file));
        }
        if (pair.references.empty()) {
            missing.push_back(sys_file.filename().string());
            continue;
        }
        pairs.push_back(std::move(pair));
    }
    if (!missing.empty()) {
        std::cerr << "documents without references:";
        for (const auto& m : missing) std::cerr << " " << m;
        std::cerr << "\n";
        return kExitResource;
    }
    if (pairs.empty()) {
        std::cerr << "no system summaries found in " << system_dir << "\n";
        return kExitEmpty;
    }
    std::cout << "n\tavg_recall\tavg_precision\tavg_f1\n";
    std::cout << std::fixed << std::setprecision(4);
    for (const auto& row : ctsum::evaluate_corpus(pairs, n_values, agg))
        std::cout << row.n << "\t" << row.avg.recall << "\t" << row.avg.precision << "\t"
                  << row.avg.f1 << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Concept-clustering extractive text summarizer"};
    app.require_subcommand(1);

    // build-stats
    std::string corpus_dir, stats_out;
    bool bs_no_fold = false;
    auto* build = app.add_subcommand("build-stats", "Scan a corpus directory into a stats file");
    build->add_option("corpus_dir", corpus_dir, "Directory of UTF-8 text documents")->required();
    build->add_option("-o,--out", stats_out, "Output stats file")->required();
    build->add_flag("--no-case-fold", bs_no_fold, "Disable case folding");

    // stopwords
    std::string sw_stats;
    std::size_t sw_count = 100;
    auto* stop = app.add_subcommand("stopwords", "Emit the most frequent corpus words");
    stop->add_option("--stats", sw_stats, "Corpus stats file")->required();
    stop->add_option("-k,--count", sw_count, "How many words")->default_val("100");

    // keywords
    CommonOptions kw_opt;
    std::string kw_doc;
    auto* kw = app.add_subcommand("keywords", "Score document terms (TSV: rank term tf idf point)");
    kw->add_option("document", kw_doc, "Input document")->required();
    add_resource_options(kw, kw_opt, false);

    // concepts
    CommonOptions co_opt;
    std::string co_doc;
    bool co_json = false;
    auto* co = app.add_subcommand("concepts", "Cluster document terms into scored concepts");
    co->add_option("document", co_doc, "Input document")->required();
    co->add_flag("--json", co_json, "Structured JSON output");
    add_resource_options(co, co_opt, true);

    // summarize
    CommonOptions su_opt;
    std::string su_doc, su_trace, su_explain;
    auto* su = app.add_subcommand("summarize", "Produce an extractive summary");
    su->add_option("document", su_doc, "Input document")->required();
    su->add_option("--trace", su_trace, "Write ranking trace TSV to this path");
    su->add_option("--explain", su_explain, "Write concept breakdown TSV to this path");
    add_resource_options(su, su_opt, true);

    // evaluate
    std::string ev_system, ev_refs, ev_agg = "mean";
    std::vector<std::size_t> ev_n = {1, 2, 3};
    bool ev_no_fold = false;
    auto* ev = app.add_subcommand("evaluate", "ROUGE-N evaluation of summaries against references");
    ev->add_option("--system", ev_system, "Directory of system summaries (*.txt)")->required();
    ev->add_option("--refs", ev_refs, "Directory of references (X.ref*.txt for X.txt)")->required();
    ev->add_option("-n,--n-values", ev_n, "n-gram sizes")->default_str("1 2 3");
    ev->add_option("--agg", ev_agg, "Multi-reference aggregation: mean|max")->default_val("mean");
    ev->add_flag("--no-case-fold", ev_no_fold, "Disable case folding");

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return cmd_build_stats(corpus_dir, stats_out, bs_no_fold);
        if (stop->parsed()) return cmd_stopwords(sw_stats, sw_count);
        if (kw->parsed()) {
            apply_config_file(kw, kw_opt);
            return cmd_keywords(kw_doc, kw_opt);
        }
        if (co->parsed()) {
            apply_config_file(co, co_opt);
            return cmd_concepts(co_doc, co_opt, co_json);
        }
        if (su->parsed()) {
            apply_config_file(su, su_opt);
            return cmd_summarize(su_doc, su_opt, su_trace, su_explain);
        }
        if (ev->parsed()) return cmd_evaluate(ev_system, ev_refs, ev_n, ev_agg, ev_no_fold);
    } catch (const ctsum::NoScoreableTermsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitEmpty;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitResource;
}
