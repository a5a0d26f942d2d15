//
// Copyright 2026 The Genderation Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "genderation/cli.h"

#include <algorithm>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "genderation/audit.h"
#include "genderation/bins.h"
#include "genderation/cda.h"
#include "genderation/corpus.h"
#include "genderation/demo.h"
#include "genderation/errors.h"
#include "genderation/eval.h"
#include "genderation/io.h"
#include "genderation/lexicon.h"
#include "genderation/ngram_model.h"

namespace genderation {
namespace {

struct Flags {
  std::string lexicon = "default";
  std::string stopwords;
  std::string corpus;
  std::string examples;
  std::string model;
  std::string out;
  std::string records;
  std::string split;
  std::string fields = "both";
  std::string format = "markdown";
  std::string name;
  std::vector<std::string> bins;
  bool no_annotate = false;
  std::size_t order = TrainOptions{}.order;
  double lambda = TrainOptions{}.lambda;
  std::optional<double> lambda_override;
  double k = TrainOptions{}.k;
  std::size_t min_count = TrainOptions{}.min_count;
  std::size_t beam = GenerationConfig{}.beam_width;
  std::size_t max_len = GenerationConfig{}.max_length;
  std::uint64_t seed = kSyntheticSeed;
  unsigned jobs = 1;
};

GenderednessBin BinFlag(const std::string& text) {
  const auto bin = parse_bin(text);
  if (!bin) {
    throw ValidationError("unknown bin '" + text +
                          "' (expected F0M0, F0M+, F+M0 or F+M+)");
  }
  return *bin;
}

GenderedLexicon Lexicon(const Flags& f) {
  return load_lexicon(resolve_lexicon_path(f.lexicon));
}

StopwordSet Stopwords(const Flags& f) {
  return load_stopwords(f.stopwords.empty() ? default_stopwords_path()
                                            : std::filesystem::path(f.stopwords));
}

DialogueCorpus Corpus(const Flags& f) {
  DialogueCorpus corpus = load_corpus(f.corpus);
  if (!f.split.empty()) corpus = filter_split(corpus, f.split);
  return corpus;
}

// Examples from --examples, or extracted and annotated from --corpus.
std::vector<TrainingExample> Examples(const Flags& f,
                                      const GenderedLexicon& lexicon) {
  if (!f.examples.empty()) return load_examples(f.examples);
  if (f.corpus.empty()) throw ValidationError("need --corpus or --examples");
  return extract_examples(Corpus(f), lexicon, true, f.jobs);
}

GenerationConfig Generation(const Flags& f) {
  GenerationConfig config;
  config.beam_width = f.beam;
  config.max_length = f.max_len;
  config.seed = f.seed;
  return config;
}

void Emit(const Flags& f, const std::string& text, std::ostream& out) {
  if (f.out.empty() || f.out == "-") {
    out << text;
  } else {
    write_file(f.out, text);
  }
}

int Audit(const Flags& f, std::ostream& out) {
  const GenderedLexicon lexicon = Lexicon(f);
  const DialogueCorpus corpus = Corpus(f);
  const BiasReport utterances = audit_utterances(corpus, lexicon, f.jobs);
  const BiasReport personas = audit_personas(corpus, lexicon);
  const std::string name =
      !f.name.empty() ? f.name
                      : std::filesystem::path(f.corpus).stem().string();
  const ReportFormat format = parse_report_format(f.format);
  Emit(f,
       format == ReportFormat::kJson
           ? render_audit_json(name, utterances, personas)
           : render_audit_markdown(name, utterances, personas),
       out);
  return kExitOk;
}

int Cda(const Flags& f, std::ostream& err) {
  const auto fields = parse_cda_fields(f.fields);
  if (!fields) {
    throw ValidationError("--fields must be turns, personas or both");
  }
  const GenderedLexicon lexicon = Lexicon(f);
  const AugmentedCorpus result = augment(Corpus(f), lexicon, *fields, f.jobs);
  write_corpus(result.corpus, f.out);
  if (!f.records.empty()) {
    write_file(f.records, render_records_json(result.records));
  }
  err << result.records.size() << " of " << result.corpus.size() -
                                               result.records.size()
      << " dialogues copied with swapped gender\n";
  return kExitOk;
}

int Bin(const Flags& f, std::ostream& out) {
  const GenderedLexicon lexicon = Lexicon(f);
  auto examples = extract_examples(Corpus(f), lexicon, !f.no_annotate, f.jobs);
  if (!f.bins.empty()) {
    if (f.bins.size() != 1) throw ValidationError("--bin takes one value here");
    if (f.no_annotate) {
      throw ValidationError("--bin needs annotated examples");
    }
    examples = force_bin(std::move(examples), BinFlag(f.bins.front()));
  }
  Emit(f, serialize_examples(examples), out);
  return kExitOk;
}

int Train(const Flags& f) {
  const GenderedLexicon lexicon = Lexicon(f);
  TrainOptions options;
  options.order = f.order;
  options.lambda = f.lambda;
  options.k = f.k;
  options.min_count = f.min_count;
  const auto model =
      ConditionalNGramModel::train(Examples(f, lexicon), options);
  model.save(f.out);
  return kExitOk;
}

ConditionalNGramModel Model(const Flags& f) {
  auto model = ConditionalNGramModel::load(f.model);
  if (f.lambda_override) model = model.with_lambda(*f.lambda_override);
  return model;
}

int Generate(const Flags& f, std::ostream& out) {
  const auto model = Model(f);
  std::vector<GenderednessBin> bins;
  for (const std::string& b : f.bins) bins.push_back(BinFlag(b));
  if (bins.empty()) bins.assign(kAllBins.begin(), kAllBins.end());
  const GenerationConfig config = Generation(f);
  for (const GenderednessBin& bin : bins) {
    out << join_tokens(model.generate(bin, config)) << "\n";
  }
  return kExitOk;
}

int Eval(const Flags& f, std::ostream& out) {
  const GenderedLexicon lexicon = Lexicon(f);
  const auto model = Model(f);
  const auto test = Examples(f, lexicon);
  EvalMode mode = EvalMode::oracle();
  if (!f.bins.empty()) {
    if (f.bins.size() != 1) throw ValidationError("--bin takes one value here");
    mode = EvalMode::force(BinFlag(f.bins.front()));
  }
  EvalReport report = evaluate(model, test, mode, Generation(f), lexicon,
                               Stopwords(f), f.jobs);
  report.label = f.name.empty() ? mode.name() : f.name;
  const std::filesystem::path dir = f.out.empty() ? "." : f.out;
  write_file(dir / "eval_report.json",
             render_report(report, ReportFormat::kJson));
  write_file(dir / "eval_report.md",
             render_report(report, ReportFormat::kMarkdown));
  write_file(dir / "generations.jsonl", serialize_generations(report.records));
  out << render_report(report, parse_report_format(f.format));
  return kExitOk;
}

int Demo(const Flags& f, std::ostream& err) {
  DemoOptions options;
  if (!f.out.empty()) options.out_dir = f.out;
  if (!f.corpus.empty()) options.corpus = f.corpus;
  options.seed = f.seed;
  options.lexicon = resolve_lexicon_path(f.lexicon);
  if (!f.stopwords.empty()) options.stopwords = f.stopwords;
  options.train.order = f.order;
  options.train.lambda = f.lambda;
  options.train.k = f.k;
  options.train.min_count = f.min_count;
  options.generation = Generation(f);
  options.jobs = f.jobs;
  run_demo(options, err);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Gender bias auditing, counterfactual augmentation and "
               "bias-controlled generation for dialogue corpora",
               "genderation"};
  app.require_subcommand(1);
  Flags f;

  auto lexicon = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", f.lexicon,
                    "Lexicon file, or 'default' ($GENDERATION_LEXICON or the "
                    "shipped list)");
  };
  auto jobs = [&](CLI::App* cmd) {
    cmd->add_option("--jobs", f.jobs, "Worker threads (0 = all cores)");
  };
  auto model_opts = [&](CLI::App* cmd) {
    cmd->add_option("--order", f.order, "N-gram order")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--lambda", f.lambda, "Per-bin interpolation weight")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--k", f.k, "Add-k smoothing constant")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--min-count", f.min_count,
                    "Tokens seen fewer times become <unk>");
  };
  auto decode_opts = [&](CLI::App* cmd) {
    cmd->add_option("--beam", f.beam, "Beam width")->check(CLI::PositiveNumber);
    cmd->add_option("--max-len", f.max_len, "Maximum generated tokens")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Seed");
  };

  auto* audit = app.add_subcommand("audit", "Gendered-word, census and bin report");
  audit->add_option("--corpus", f.corpus, "Corpus JSONL")->required();
  audit->add_option("--split", f.split, "Only dialogues with this split tag");
  audit->add_option("--format", f.format, "markdown or json");
  audit->add_option("--out", f.out, "Output file (default stdout)");
  audit->add_option("--name", f.name, "Row label");
  lexicon(audit);
  jobs(audit);

  auto* cda = app.add_subcommand("cda", "Counterfactual data augmentation");
  cda->add_option("--in,--corpus", f.corpus, "Corpus JSONL")->required();
  cda->add_option("--out", f.out, "Augmented corpus JSONL")->required();
  cda->add_option("--fields", f.fields, "turns, personas or both");
  cda->add_option("--records", f.records,
                  "Augmentation records JSON (default stderr)");
  cda->add_option("--split", f.split, "Only dialogues with this split tag");
  lexicon(cda);
  jobs(cda);

  auto* bin = app.add_subcommand("bin", "Extract bin-annotated training examples");
  bin->add_option("--corpus", f.corpus, "Corpus JSONL")->required();
  bin->add_option("--out", f.out, "Examples JSONL (default stdout)");
  bin->add_option("--split", f.split, "Only dialogues with this split tag");
  bin->add_flag("--no-annotate", f.no_annotate, "Leave control tokens out");
  bin->add_option("--bin", f.bins, "Force every control token to this bin");
  lexicon(bin);
  jobs(bin);

  auto* train = app.add_subcommand("train", "Train the conditional n-gram model");
  train->add_option("--corpus", f.corpus, "Corpus JSONL");
  train->add_option("--examples", f.examples, "Examples JSONL");
  train->add_option("--split", f.split, "Only dialogues with this split tag");
  train->add_option("--out", f.out, "Model file")->required();
  model_opts(train);
  lexicon(train);
  jobs(train);

  auto* generate = app.add_subcommand("generate", "Decode one utterance per bin");
  generate->add_option("--model", f.model, "Model file")->required();
  generate->add_option("--bin", f.bins, "Bins to decode (default all four)");
  generate->add_option("--lambda", f.lambda_override,
                       "Override the model's interpolation weight")
      ->check(CLI::Range(0.0, 1.0));
  decode_opts(generate);

  auto* eval = app.add_subcommand("eval", "Per-bin evaluation of a model");
  eval->add_option("--model", f.model, "Model file")->required();
  eval->add_option("--corpus", f.corpus, "Test corpus JSONL");
  eval->add_option("--examples", f.examples, "Test examples JSONL");
  eval->add_option("--split", f.split, "Only dialogues with this split tag");
  eval->add_option("--bin", f.bins, "Force this bin (default: gold bins)");
  eval->add_option("--out", f.out, "Output directory");
  eval->add_option("--format", f.format, "Report printed to stdout");
  eval->add_option("--name", f.name, "Row label");
  eval->add_option("--stopwords", f.stopwords, "Stopword list");
  eval->add_option("--lambda", f.lambda_override,
                   "Override the model's interpolation weight")
      ->check(CLI::Range(0.0, 1.0));
  decode_opts(eval);
  lexicon(eval);
  jobs(eval);

  auto* demo = app.add_subcommand("demo", "End-to-end run on the synthetic corpus");
  demo->add_option("--out", f.out, "Output directory (default demo_out)");
  demo->add_option("--corpus", f.corpus, "Use this corpus instead");
  demo->add_option("--stopwords", f.stopwords, "Stopword list");
  model_opts(demo);
  decode_opts(demo);
  lexicon(demo);
  jobs(demo);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (*audit) return Audit(f, out);
    if (*cda) return Cda(f, err);
    if (*bin) return Bin(f, out);
    if (*train) return Train(f);
    if (*generate) return Generate(f, out);
    if (*eval) return Eval(f, out);
    if (*demo) return Demo(f, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  err << app.help();
  return kExitValidation;
}

}  // namespace genderation
