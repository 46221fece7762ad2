// Command-line front end for the zero-resource POS tagging pipeline.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "zeropos/pipeline.hpp"

using namespace zeropos;

namespace {

void add_aligner_options(CLI::App* cmd, PipelineConfig& config) {
  std::map<std::string, AlignerVariant> variants{
      {"ibm1", AlignerVariant::IBM1}, {"diag", AlignerVariant::DIAG_IBM2}};
  std::map<std::string, SymHeuristic> heuristics{
      {"intersection", SymHeuristic::INTERSECTION},
      {"union", SymHeuristic::UNION},
      {"grow-diag-final-and", SymHeuristic::GROW_DIAG_FINAL_AND}};
  cmd->add_option("--variant", config.variant, "aligner variant")
      ->transform(CLI::CheckedTransformer(variants, CLI::ignore_case))
      ->default_str("diag");
  cmd->add_option("--iterations", config.iterations, "EM iterations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--lambda", config.align_params.lambda,
                  "diagonal tension (diag variant)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--p0", config.align_params.null_prob,
                  "NULL alignment probability")
      ->check(CLI::Range(0.0, 0.999999))
      ->capture_default_str();
  cmd->add_option("--sym", config.heuristic, "symmetrization heuristic")
      ->transform(CLI::CheckedTransformer(heuristics, CLI::ignore_case))
      ->default_str("grow-diag-final-and");
}

void add_limit_option(CLI::App* cmd, PipelineConfig& config) {
  cmd->add_option("--limit-sentences", config.limit_sentences,
                  "keep only the first N training sentences (0 = all)")
      ->check(CLI::NonNegativeNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zero-resource POS tagging: alignment, projection, HMM"};
  app.require_subcommand(1);
  app.set_config("--config", "", "key=value configuration file");
  app.fallthrough(false);

  PipelineConfig config;

  CLI::App* align = app.add_subcommand("align", "train aligners and write Pharaoh links");
  align->add_option("--bitext", config.bitext, "bitext file")->required();
  align->add_option("--output", config.output_file, "Pharaoh output")->required();
  add_aligner_options(align, config);
  add_limit_option(align, config);

  CLI::App* project = app.add_subcommand("project", "project tags through an alignment");
  project->add_option("--source", config.source_conllu, "tagged source CoNLL-U")->required();
  project->add_option("--bitext", config.bitext, "bitext file")->required();
  project->add_option("--alignment", config.alignment, "Pharaoh alignment file")->required();
  project->add_option("--output", config.output_file, "projected CoNLL-U output")->required();
  project->add_flag("--lenient-upos", config.lenient_upos, "map unknown UPOS to X");
  add_limit_option(project, config);

  CLI::App* train = app.add_subcommand("train", "train the HMM tagger");
  train->add_option("--input", config.input_file, "tagged CoNLL-U corpus")->required();
  train->add_option("--model", config.model_file, "model output file")->required();
  train->add_flag("--lenient-upos", config.lenient_upos, "map unknown UPOS to X");
  add_limit_option(train, config);

  CLI::App* tag = app.add_subcommand("tag", "decode sentences with a trained model");
  std::map<std::string, TagInputFormat> formats{
      {"text", TagInputFormat::TEXT}, {"conllu", TagInputFormat::CONLLU}};
  tag->add_option("--model", config.model_file, "model file")->required();
  tag->add_option("--input", config.input_file, "sentences to tag")->required();
  tag->add_option("--output", config.output_file, "CoNLL-U predictions")->required();
  tag->add_option("--format", config.tag_format,
                  "input format: text (one sentence per line) or conllu")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  tag->add_option("--alpha", config.transition_alpha, "transition smoothing")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  CLI::App* eval = app.add_subcommand("eval", "score predictions against gold tags");
  eval->add_option("--gold", config.gold_file, "gold CoNLL-U");
  eval->add_option("--pred", config.pred_file, "predicted CoNLL-U");
  eval->add_option("--tsv", config.tsv_file, "form<TAB>gold<TAB>pred file");
  eval->add_option("--dump", config.dump_file, "key=value dump file");
  eval->add_flag("--lenient-upos", config.lenient_upos, "map unknown UPOS to X");

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "align, project, train, tag, and evaluate in one run");
  pipeline->add_option("--source", config.source_conllu, "tagged source CoNLL-U")->required();
  pipeline->add_option("--bitext", config.bitext, "bitext file")->required();
  pipeline->add_option("--test", config.test_conllu, "gold target test CoNLL-U")->required();
  pipeline->add_option("--outdir", config.output_dir, "artifact directory")->required();
  pipeline->add_option("--alignment", config.alignment,
                       "external Pharaoh alignment (skips aligner training)");
  pipeline->add_option("--dump", config.dump_file, "key=value dump file");
  pipeline->add_option("--alpha", config.transition_alpha, "transition smoothing")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  pipeline->add_flag("--lenient-upos", config.lenient_upos, "map unknown UPOS to X");
  add_aligner_options(pipeline, config);
  add_limit_option(pipeline, config);

  CLI::App* synth = app.add_subcommand(
      "synth", "generate a synthetic cipher corpus for end-to-end checks");
  synth->add_option("--seed", config.seed, "random seed")->capture_default_str();
  synth->add_option("--sentences", config.synth_sentences, "number of sentences")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  synth->add_option("--outdir", config.output_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (align->parsed()) cmd_align(config, std::cout);
    if (project->parsed()) cmd_project(config, std::cout);
    if (train->parsed()) cmd_train(config, std::cout);
    if (tag->parsed()) cmd_tag(config, std::cout);
    if (eval->parsed()) cmd_eval(config, std::cout);
    if (pipeline->parsed()) cmd_pipeline(config, std::cout);
    if (synth->parsed()) cmd_synth(config, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
