#include "zeropos/pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "zeropos/projection.hpp"
#include "zeropos/synth.hpp"

namespace zeropos {

namespace fs = std::filesystem;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw std::runtime_error(path + ": read failed");
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<Alignment> read_pharaoh_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::vector<Alignment> alignments;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    try {
      alignments.push_back(parse_pharaoh(line));
    } catch (const std::exception& e) {
      throw std::runtime_error(path + ": line " + std::to_string(line_no) +
                               ": " + e.what());
    }
  }
  return alignments;
}

std::string format_pharaoh_file(const std::vector<Alignment>& alignments) {
  std::string out;
  for (const Alignment& a : alignments) {
    out += write_pharaoh(a);
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void fail_with_path(const std::string& path,
                                 const std::exception& e) {
  throw std::runtime_error(path + ": " + e.what());
}

std::vector<Sentence> load_conllu(const std::string& path, bool lenient) {
  std::string text = read_text_file(path);
  try {
    return parse_conllu(text, lenient);
  } catch (const std::exception& e) {
    fail_with_path(path, e);
  }
}

std::vector<SentencePair> load_bitext(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return parse_bitext(text);
  } catch (const std::exception& e) {
    fail_with_path(path, e);
  }
}

HmmModel load_model_file(const std::string& path) {
  std::string text = read_text_file(path);
  try {
    return load_model(text);
  } catch (const std::exception& e) {
    fail_with_path(path, e);
  }
}

template <typename T>
void truncate_to(std::vector<T>& v, long limit) {
  if (limit > 0 && static_cast<long>(v.size()) > limit) v.resize(limit);
}

std::vector<SentencePair> swap_sides(const std::vector<SentencePair>& pairs) {
  std::vector<SentencePair> out(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out[k].source = pairs[k].target;
    out[k].target = pairs[k].source;
  }
  return out;
}

struct AlignStats {
  long pairs = 0;
  long target_tokens = 0;
  long unaligned_tokens = 0;
};

std::vector<Alignment> align_bitext(const std::vector<SentencePair>& pairs,
                                    const PipelineConfig& config,
                                    AlignStats& stats) {
  AlignModel forward = train_aligner(pairs, config.variant, config.iterations,
                                     config.align_params);
  std::vector<SentencePair> reversed = swap_sides(pairs);
  AlignModel reverse = train_aligner(reversed, config.variant,
                                     config.iterations, config.align_params);

  std::vector<Alignment> alignments;
  alignments.reserve(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    Alignment fwd = decode(forward, pairs[k]);
    Alignment rev = decode(reverse, reversed[k]);
    Alignment sym = symmetrize(fwd, rev, config.heuristic);
    stats.pairs += 1;
    stats.target_tokens += static_cast<long>(pairs[k].target.size());
    std::vector<char> covered(pairs[k].target.size(), 0);
    for (const AlignmentLink& l : sym.links) covered[l.tgt] = 1;
    for (char c : covered) {
      if (!c) ++stats.unaligned_tokens;
    }
    alignments.push_back(std::move(sym));
  }
  return alignments;
}

std::vector<Sentence> sentences_to_tag(const PipelineConfig& config) {
  if (config.tag_format == TagInputFormat::CONLLU) {
    std::vector<Sentence> parsed =
        load_conllu(config.input_file, config.lenient_upos);
    for (Sentence& sent : parsed) {
      for (Token& tok : sent.tokens) tok.tag.reset();
    }
    return parsed;
  }
  std::string text = read_text_file(config.input_file);
  std::istringstream in(text);
  std::vector<Sentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    Sentence sent;
    std::istringstream words(line);
    std::string w;
    while (words >> w) sent.tokens.push_back(Token{w, std::nullopt});
    if (!sent.tokens.empty()) out.push_back(std::move(sent));
  }
  return out;
}

std::vector<Sentence> tag_sentences(const HmmModel& model,
                                    std::vector<Sentence> sentences,
                                    double alpha) {
  DecodingConfig config{alpha};
  std::vector<std::string> words;
  for (Sentence& sent : sentences) {
    words.clear();
    for (const Token& tok : sent.tokens) words.push_back(tok.form);
    std::vector<UposTag> tags = viterbi(model, words, config);
    for (std::size_t t = 0; t < tags.size(); ++t) {
      sent.tokens[t].tag = tags[t];
    }
  }
  return sentences;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

}  // namespace

void cmd_align(const PipelineConfig& config, std::ostream& log) {
  require(!config.bitext.empty(), "align: no bitext file given");
  require(!config.output_file.empty(), "align: no output file given");
  std::vector<SentencePair> pairs = load_bitext(config.bitext);
  truncate_to(pairs, config.limit_sentences);

  AlignStats stats;
  std::vector<Alignment> alignments = align_bitext(pairs, config, stats);
  write_text_file(config.output_file, format_pharaoh_file(alignments));
  double null_rate =
      stats.target_tokens == 0
          ? 0.0
          : static_cast<double>(stats.unaligned_tokens) / stats.target_tokens;
  log << "aligned " << stats.pairs << " pairs, NULL-alignment rate "
      << null_rate << " (" << stats.unaligned_tokens << "/"
      << stats.target_tokens << " target tokens unlinked)\n";
}

void cmd_project(const PipelineConfig& config, std::ostream& log) {
  require(!config.source_conllu.empty(), "project: no source CoNLL-U given");
  require(!config.bitext.empty(), "project: no bitext file given");
  require(!config.alignment.empty(), "project: no alignment file given");
  require(!config.output_file.empty(), "project: no output file given");

  std::vector<Sentence> source =
      load_conllu(config.source_conllu, config.lenient_upos);
  std::vector<SentencePair> pairs = load_bitext(config.bitext);
  std::vector<Alignment> alignments = read_pharaoh_file(config.alignment);
  truncate_to(source, config.limit_sentences);
  truncate_to(pairs, config.limit_sentences);
  truncate_to(alignments, config.limit_sentences);

  ProjectionSummary summary;
  std::vector<Sentence> projected =
      project_corpus(source, pairs, alignments, &summary);
  write_text_file(config.output_file, write_conllu(projected));
  log << summary.to_string();
}

void cmd_train(const PipelineConfig& config, std::ostream& log) {
  require(!config.input_file.empty(), "train: no training CoNLL-U given");
  require(!config.model_file.empty(), "train: no model output file given");
  std::vector<Sentence> corpus =
      load_conllu(config.input_file, config.lenient_upos);
  truncate_to(corpus, config.limit_sentences);
  HmmModel model = train_hmm(corpus);
  write_text_file(config.model_file, save_model(model));
  log << "trained on " << corpus.size() << " sentences: "
      << model.num_states() << " states, " << model.vocab.size()
      << " word forms\n";
}

void cmd_tag(const PipelineConfig& config, std::ostream& log) {
  require(!config.model_file.empty(), "tag: no model file given");
  require(!config.input_file.empty(), "tag: no input file given");
  require(!config.output_file.empty(), "tag: no output file given");
  HmmModel model = load_model_file(config.model_file);
  std::vector<Sentence> tagged = tag_sentences(
      model, sentences_to_tag(config), config.transition_alpha);
  write_text_file(config.output_file, write_conllu(tagged));
  log << "tagged " << tagged.size() << " sentences\n";
}

EvalReport cmd_eval(const PipelineConfig& config, std::ostream& log) {
  std::vector<Sentence> gold, pred;
  if (!config.tsv_file.empty()) {
    std::string text = read_text_file(config.tsv_file);
    std::istringstream in(text);
    try {
      std::tie(gold, pred) = parse_tagged_tsv(in);
    } catch (const std::exception& e) {
      fail_with_path(config.tsv_file, e);
    }
  } else {
    require(!config.gold_file.empty() && !config.pred_file.empty(),
            "eval: need either a TSV file or gold and predicted CoNLL-U files");
    gold = load_conllu(config.gold_file, config.lenient_upos);
    pred = load_conllu(config.pred_file, config.lenient_upos);
  }
  EvalReport report = evaluate(gold, pred);
  log << render_table(report);
  if (!config.dump_file.empty()) {
    write_text_file(config.dump_file, render_key_values(report));
  }
  return report;
}

EvalReport cmd_pipeline(const PipelineConfig& config, std::ostream& log) {
  require(!config.source_conllu.empty(), "pipeline: no source CoNLL-U given");
  require(!config.bitext.empty(), "pipeline: no bitext file given");
  require(!config.test_conllu.empty(), "pipeline: no test CoNLL-U given");
  require(!config.output_dir.empty(), "pipeline: no output directory given");
  fs::create_directories(config.output_dir);
  fs::path dir(config.output_dir);

  auto stage = [&](const char* name, auto&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      throw std::runtime_error(std::string("pipeline stage '") + name +
                               "' failed: " + e.what());
    }
  };

  std::vector<Sentence> source;
  std::vector<SentencePair> pairs;
  stage("load", [&] {
    source = load_conllu(config.source_conllu, config.lenient_upos);
    pairs = load_bitext(config.bitext);
    truncate_to(source, config.limit_sentences);
    truncate_to(pairs, config.limit_sentences);
  });

  std::vector<Alignment> alignments;
  stage("align", [&] {
    if (!config.alignment.empty()) {
      alignments = read_pharaoh_file(config.alignment);
      truncate_to(alignments, config.limit_sentences);
      require(alignments.size() == pairs.size(),
              "external alignment has " + std::to_string(alignments.size()) +
                  " lines for " + std::to_string(pairs.size()) +
                  " bitext pairs");
      log << "using external alignments from " << config.alignment << '\n';
    } else {
      AlignStats stats;
      alignments = align_bitext(pairs, config, stats);
      double null_rate = stats.target_tokens == 0
                             ? 0.0
                             : static_cast<double>(stats.unaligned_tokens) /
                                   stats.target_tokens;
      log << "aligned " << stats.pairs << " pairs, NULL-alignment rate "
          << null_rate << '\n';
    }
    write_text_file((dir / "alignments.pharaoh").string(),
                    format_pharaoh_file(alignments));
  });

  std::vector<Sentence> projected;
  stage("project", [&] {
    ProjectionSummary summary;
    projected = project_corpus(source, pairs, alignments, &summary);
    write_text_file((dir / "projected.conllu").string(),
                    write_conllu(projected));
    write_text_file((dir / "projection_summary.txt").string(),
                    summary.to_string());
    log << summary.to_string();
  });

  HmmModel model;
  stage("train", [&] {
    model = train_hmm(projected);
    write_text_file((dir / "model.hmm").string(), save_model(model));
    log << "trained " << model.num_states() << "-state model on "
        << projected.size() << " sentences\n";
  });

  std::vector<Sentence> gold, predictions;
  stage("tag", [&] {
    gold = load_conllu(config.test_conllu, config.lenient_upos);
    std::vector<Sentence> inputs = gold;
    for (Sentence& sent : inputs) {
      for (Token& tok : sent.tokens) tok.tag.reset();
    }
    predictions =
        tag_sentences(model, std::move(inputs), config.transition_alpha);
    write_text_file((dir / "predictions.conllu").string(),
                    write_conllu(predictions));
  });

  EvalReport report;
  stage("eval", [&] {
    report = evaluate(gold, predictions);
    write_text_file((dir / "report.txt").string(), render_table(report));
    if (!config.dump_file.empty()) {
      write_text_file(config.dump_file, render_key_values(report));
    }
    log << render_table(report);
  });
  return report;
}

void cmd_synth(const PipelineConfig& config, std::ostream& log) {
  require(!config.output_dir.empty(), "synth: no output directory given");
  SynthCorpus corpus = synth_corpus(config.seed, config.synth_sentences);
  fs::create_directories(config.output_dir);
  fs::path dir(config.output_dir);
  write_text_file((dir / "source.conllu").string(),
                  write_conllu(corpus.source));
  write_text_file((dir / "bitext.txt").string(), write_bitext(corpus.bitext));
  write_text_file((dir / "target_gold.conllu").string(),
                  write_conllu(corpus.target_gold));
  log << "wrote " << corpus.source.size() << " synthetic sentences to "
      << config.output_dir << '\n';
}

}  // namespace zeropos
