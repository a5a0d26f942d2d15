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

#include "genderation/demo.h"

#include <string>
#include <vector>

#include "genderation/audit.h"
#include "genderation/bins.h"
#include "genderation/cda.h"
#include "genderation/corpus.h"
#include "genderation/errors.h"
#include "genderation/eval.h"
#include "genderation/io.h"
#include "genderation/lexicon.h"

namespace genderation {

std::filesystem::path bundled_corpus_path() {
  return std::filesystem::path(GENDERATION_DATA_DIR) / "synthetic_corpus.jsonl";
}

namespace {

void WriteEval(const std::filesystem::path& dir, const EvalReport& report) {
  write_file(dir / "eval_report.json",
             render_report(report, ReportFormat::kJson));
  write_file(dir / "eval_report.md",
             render_report(report, ReportFormat::kMarkdown));
  write_file(dir / "generations.jsonl", serialize_generations(report.records));
}

}  // namespace

void run_demo(const DemoOptions& options, std::ostream& log) {
  const auto& out = options.out_dir;
  const GenderedLexicon lexicon = load_lexicon(
      options.lexicon.empty() ? default_lexicon_path() : options.lexicon);
  const StopwordSet stopwords = load_stopwords(
      options.stopwords.empty() ? default_stopwords_path() : options.stopwords);

  DialogueCorpus corpus;
  if (options.corpus) {
    corpus = load_corpus(*options.corpus);
  } else if (options.seed == kSyntheticSeed) {
    corpus = load_corpus(bundled_corpus_path());
  } else {
    corpus = make_synthetic_corpus(options.seed);
  }
  write_corpus(corpus, out / "corpus.jsonl");

  log << "audit: " << corpus.size() << " dialogues\n";
  const BiasReport utterances = audit_utterances(corpus, lexicon, options.jobs);
  const BiasReport personas = audit_personas(corpus, lexicon);
  write_file(out / "audit.json",
             render_audit_json("synthetic", utterances, personas));
  const std::string audit_md =
      render_audit_markdown("synthetic", utterances, personas);
  write_file(out / "audit.md", audit_md);

  const DialogueCorpus train = filter_split(corpus, "train");
  const DialogueCorpus test = filter_split(corpus, "test");
  if (train.empty() || test.empty()) {
    throw ValidationError("demo corpus needs dialogues tagged train and test");
  }

  log << "cda: augmenting " << train.size() << " training dialogues\n";
  const AugmentedCorpus cda =
      augment(train, lexicon, CdaFields::kBoth, options.jobs);
  write_corpus(cda.corpus, out / "corpus_cda.jsonl");
  write_file(out / "cda_records.json", render_records_json(cda.records));

  log << "bin: extracting examples\n";
  const auto train_plain = extract_examples(train, lexicon, true, options.jobs);
  const auto train_all = extract_examples(cda.corpus, lexicon, true, options.jobs);
  const auto test_examples = extract_examples(test, lexicon, true, options.jobs);
  write_examples(train_all, out / "examples_train.jsonl");
  write_examples(test_examples, out / "examples_test.jsonl");

  log << "train: " << train_all.size() << " examples (cda + control tokens)\n";
  const auto model = ConditionalNGramModel::train(train_all, options.train);
  model.save(out / "model.json");
  TrainOptions baseline_options = options.train;
  baseline_options.lambda = 0.0;
  const auto baseline =
      ConditionalNGramModel::train(train_plain, baseline_options);
  baseline.save(out / "baseline_model.json");

  log << "eval: " << test_examples.size() << " test examples\n";
  std::vector<EvalReport> rows;
  const ResponseGenerator echo = [](const TrainingExample& ex, GenderednessBin) {
    return ex.response;
  };
  rows.push_back(evaluate(echo, test_examples, EvalMode::oracle(), lexicon,
                          stopwords, options.jobs));
  rows.back().label = "Gold Lbl";
  WriteEval(out / "eval" / "gold", rows.back());

  rows.push_back(evaluate(baseline, test_examples, EvalMode::oracle(),
                          options.generation, lexicon, stopwords,
                          options.jobs));
  rows.back().label = "Baseline";
  WriteEval(out / "eval" / "baseline", rows.back());

  rows.push_back(evaluate(model, test_examples, EvalMode::oracle(),
                          options.generation, lexicon, stopwords,
                          options.jobs));
  rows.back().label = "ALL";
  WriteEval(out / "eval" / "oracle", rows.back());

  for (const GenderednessBin& bin : kAllBins) {
    rows.push_back(evaluate(model, test_examples, EvalMode::force(bin),
                            options.generation, lexicon, stopwords,
                            options.jobs));
    rows.back().label = "ALL " + bin.name();
    WriteEval(out / "eval" / ("forced-" + bin.name()), rows.back());
  }

  write_file(out / "summary.md", "# Demo summary\n\n" + audit_md +
                                     "\n## Generation by gold-bin split\n\n" +
                                     render_table(rows));
  log << "demo: wrote " << out.string() << "\n";
}

}  // namespace genderation
