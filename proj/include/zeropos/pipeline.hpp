#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "zeropos/aligner.hpp"
#include "zeropos/evalmetrics.hpp"
#include "zeropos/hmm.hpp"

namespace zeropos {

enum class TagInputFormat { TEXT, CONLLU };

// Everything the subcommands read; each command uses the fields it needs.
struct PipelineConfig {
  // inputs
  std::string source_conllu;   // tagged source treebank
  std::string bitext;          // source ||| target lines
  std::string alignment;       // optional external Pharaoh file
  std::string test_conllu;     // gold target test set
  std::string model_file;
  std::string input_file;      // sentences to tag
  std::string gold_file;
  std::string pred_file;
  std::string tsv_file;        // form<TAB>gold<TAB>pred alternative

  // outputs
  std::string output_file;
  std::string output_dir;
  std::string dump_file;       // key=value report dump

  // aligner settings
  AlignerVariant variant = AlignerVariant::DIAG_IBM2;
  int iterations = 5;
  DiagonalParams align_params;
  SymHeuristic heuristic = SymHeuristic::GROW_DIAG_FINAL_AND;

  // decoding / parsing settings
  double transition_alpha = 1e-6;
  bool lenient_upos = false;
  TagInputFormat tag_format = TagInputFormat::TEXT;

  // synth settings
  std::uint64_t seed = 1;
  int synth_sentences = 1000;

  // 0 = use everything; otherwise keep the first k training sentences
  long limit_sentences = 0;
};

// Trains forward and reverse aligners, decodes both directions, symmetrizes,
// and writes one Pharaoh line per pair. Logs the NULL-alignment rate.
void cmd_align(const PipelineConfig& config, std::ostream& log);

// Projects tags through an alignment file onto the bitext target side and
// writes the kept sentences as CoNLL-U plus a summary.
void cmd_project(const PipelineConfig& config, std::ostream& log);

void cmd_train(const PipelineConfig& config, std::ostream& log);

void cmd_tag(const PipelineConfig& config, std::ostream& log);

EvalReport cmd_eval(const PipelineConfig& config, std::ostream& log);

// align -> project -> train -> tag -> eval, writing every intermediate
// artifact under output_dir. A failing stage aborts with its name.
EvalReport cmd_pipeline(const PipelineConfig& config, std::ostream& log);

// Writes source.conllu, bitext.txt, and target_gold.conllu under output_dir.
void cmd_synth(const PipelineConfig& config, std::ostream& log);

// File helpers shared by the commands; errors carry the path.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
std::vector<Alignment> read_pharaoh_file(const std::string& path);
std::string format_pharaoh_file(const std::vector<Alignment>& alignments);

}  // namespace zeropos
