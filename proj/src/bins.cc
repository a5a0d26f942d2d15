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

#include "genderation/bins.h"

#include <json.hpp>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "genderation/parallel.h"
#include "genderation/text.h"

namespace genderation {

std::string GenderednessBin::name() const {
  std::string out = "F0M0";
  if (female_present) out[1] = '+';
  if (male_present) out[3] = '+';
  return out;
}

std::string GenderednessBin::control_token() const {
  return "<" + name() + ">";
}

std::optional<GenderednessBin> parse_bin(std::string_view text) {
  if (text.size() == 6 && text.front() == '<' && text.back() == '>') {
    text = text.substr(1, 4);
  }
  if (text.size() != 4 || text[0] != 'F' || text[2] != 'M') {
    return std::nullopt;
  }
  auto flag = [](char c) -> std::optional<bool> {
    if (c == '0') return false;
    if (c == '+' || c == '1') return true;
    return std::nullopt;
  };
  const auto female = flag(text[1]);
  const auto male = flag(text[3]);
  if (!female || !male) return std::nullopt;
  return GenderednessBin{*female, *male};
}

GenderednessBin classify(std::string_view response,
                         const GenderedLexicon& lexicon) {
  GenderednessBin bin;
  for (const std::string& token : tokenize(response).tokens) {
    switch (lexicon.gender_of(token)) {
      case Gender::kFemale:
        bin.female_present = true;
        break;
      case Gender::kMale:
        bin.male_present = true;
        break;
      case Gender::kNeutral:
        break;
    }
    if (bin.female_present && bin.male_present) break;
  }
  return bin;
}

BinningFunction word_list_binning(const GenderedLexicon& lexicon) {
  return [&lexicon](std::string_view response) {
    return classify(response, lexicon);
  };
}

std::vector<TrainingExample> extract_examples(const DialogueCorpus& corpus,
                                              const BinningFunction& binning,
                                              bool annotate, unsigned jobs) {
  std::vector<std::vector<TrainingExample>> per_dialogue(corpus.size());
  parallel_for(corpus.size(), jobs, [&](std::size_t d) {
    const Dialogue& dialogue = corpus[d];
    std::string history;
    for (const Character& c : dialogue.characters) {
      if (trim(c.persona).empty()) continue;
      if (!history.empty()) history += kContextSeparator;
      history += c.persona;
    }
    for (std::size_t t = 0; t < dialogue.turns.size(); ++t) {
      const std::string& text = dialogue.turns[t].text;
      if (t > 0) {
        TrainingExample ex;
        ex.context = history;
        ex.response = text;
        ex.bin = binning(text);
        if (annotate) {
          ex.control_token = ex.bin.control_token();
          ex.context += kContextSeparator;
          ex.context += ex.control_token;
        }
        per_dialogue[d].push_back(std::move(ex));
      }
      if (!history.empty()) history += kContextSeparator;
      history += text;
    }
  });
  std::vector<TrainingExample> out;
  for (auto& block : per_dialogue) {
    for (auto& ex : block) out.push_back(std::move(ex));
  }
  return out;
}

std::vector<TrainingExample> extract_examples(const DialogueCorpus& corpus,
                                              const GenderedLexicon& lexicon,
                                              bool annotate, unsigned jobs) {
  return extract_examples(corpus, word_list_binning(lexicon), annotate, jobs);
}

std::vector<TrainingExample> force_bin(std::vector<TrainingExample> examples,
                                       GenderednessBin bin) {
  const std::string token = bin.control_token();
  for (TrainingExample& ex : examples) {
    if (ex.control_token.empty() || !ex.context.ends_with(ex.control_token)) {
      throw ValidationError("force_bin needs annotated examples");
    }
    ex.context.resize(ex.context.size() - ex.control_token.size());
    ex.context += token;
    ex.control_token = token;
  }
  return examples;
}

std::string serialize_examples(const std::vector<TrainingExample>& examples) {
  std::string out;
  for (const TrainingExample& ex : examples) {
    nlohmann::ordered_json j;
    j["context"] = ex.context;
    j["response"] = ex.response;
    j["bin"] = ex.bin.name();
    j["control_token"] = ex.control_token;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<TrainingExample> parse_examples(std::string_view jsonl,
                                            const std::string& origin) {
  std::vector<TrainingExample> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < jsonl.size()) {
    std::size_t end = jsonl.find('\n', start);
    if (end == std::string_view::npos) end = jsonl.size();
    const std::string_view text = jsonl.substr(start, end - start);
    start = end + 1;
    ++line;
    if (trim(text).empty()) continue;
    try {
      const auto j = nlohmann::json::parse(text);
      TrainingExample ex;
      ex.context = j.at("context").get<std::string>();
      ex.response = j.at("response").get<std::string>();
      const auto bin = parse_bin(j.at("bin").get<std::string>());
      if (!bin) throw ParseError(origin, line, "unknown bin");
      ex.bin = *bin;
      ex.control_token = j.at("control_token").get<std::string>();
      if (!ex.control_token.empty() && !ex.context.ends_with(ex.control_token)) {
        throw ParseError(origin, line, "context does not end with control_token");
      }
      out.push_back(std::move(ex));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(origin, line, e.what());
    }
  }
  return out;
}

void write_examples(const std::vector<TrainingExample>& examples,
                    const std::filesystem::path& path) {
  write_file(path, serialize_examples(examples));
}

std::vector<TrainingExample> load_examples(const std::filesystem::path& path) {
  return parse_examples(read_file(path), path.string());
}

}  // namespace genderation
