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

#include "genderation/corpus.h"

#include <filesystem>
#include <string>

#include <doctest.h>

#include "genderation/errors.h"
#include "genderation/io.h"
#include "generators.h"
#include "oracles.h"

using namespace genderation;

namespace {

const char kTwoLines[] =
    R"({"id":"a","characters":[{"name":"guard","persona":"I guard the gate.","gender_label":"M"},{"name":"cook","persona":"I bake bread.","gender_label":"U"}],"turns":[{"speaker_index":0,"text":"Halt!"},{"speaker_index":1,"text":"It is only me."}]})"
    "\n"
    R"({"id":"b","split":"test","characters":[{"name":"queen","persona":"I rule.","gender_label":"F"}],"turns":[]})"
    "\n";

std::filesystem::path TmpPath(const std::string& name) {
  return std::filesystem::path(GENDERATION_TEST_TMP) / "corpus_test" / name;
}

std::size_t ErrorLine(std::string_view text) {
  try {
    parse_corpus(text, "c.jsonl");
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse a two line corpus") {
  const DialogueCorpus corpus = parse_corpus(kTwoLines);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].id == "a");
  CHECK_FALSE(corpus[0].split.has_value());
  CHECK(corpus[0].characters[1].gender_label == GenderLabel::kUnknown);
  CHECK(corpus[0].turns[1].text == "It is only me.");
  CHECK(corpus[1].split == "test");
  CHECK(corpus[1].turns.empty());
}

TEST_CASE("speaker index out of range names the line") {
  const std::string bad =
      std::string(kTwoLines) +
      R"({"id":"c","characters":[{"name":"x","persona":"","gender_label":"N"},{"name":"y","persona":"","gender_label":"N"}],"turns":[{"speaker_index":5,"text":"hi"}]})"
      "\n";
  try {
    parse_corpus(bad, "c.jsonl");
    FAIL("expected a schema error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("c.jsonl:3") != std::string::npos);
    CHECK(std::string(e.what()).find("speaker_index 5") != std::string::npos);
  }
}

TEST_CASE("duplicate ids are rejected") {
  const std::string line = R"({"id":"a","characters":[{"name":"x","persona":"","gender_label":"N"}],"turns":[]})";
  CHECK(ErrorLine(line + "\n" + line + "\n") == 2);
  DialogueCorpus corpus;
  corpus.add(Dialogue{"x", std::nullopt, {Character{"n", "", GenderLabel::kMale}}, {}});
  CHECK_THROWS_AS(
      corpus.add(Dialogue{"x", std::nullopt, {Character{"n", "", GenderLabel::kMale}}, {}}),
      ValidationError);
}

TEST_CASE("schema violations") {
  CHECK(ErrorLine("not json\n") == 1);
  CHECK(ErrorLine("[1,2]\n") == 1);
  CHECK(ErrorLine(R"({"characters":[],"turns":[]})") == 1);
  CHECK(ErrorLine(R"({"id":"a","characters":[],"turns":[]})") == 1);
  CHECK(ErrorLine(R"({"id":"a","characters":[{"name":"x","persona":"","gender_label":"Q"}],"turns":[]})") == 1);
  CHECK(ErrorLine(R"({"id":"a","characters":[{"name":"x","persona":"","gender_label":"F"}],"turns":[{"speaker_index":-1,"text":"a"}]})") == 1);
  CHECK(ErrorLine(R"({"id":"a","characters":[{"name":"x","persona":"","gender_label":"F"}],"turns":[{"speaker_index":0,"text":""}]})") == 1);
  // Blank lines are skipped but still counted.
  CHECK(ErrorLine("\n\n{}\n") == 3);
}

TEST_CASE("round trip through a file") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DialogueCorpus corpus = gen::RandomCorpus(seed, seed * 3);
    const auto path = TmpPath("rt.jsonl");
    write_corpus(corpus, path);
    CHECK(load_corpus(path) == corpus);
    CHECK(serialize_corpus(parse_corpus(serialize_corpus(corpus))) ==
          serialize_corpus(corpus));
  }
}

TEST_CASE("empty corpus writes an empty file") {
  const auto path = TmpPath("empty.jsonl");
  write_corpus(DialogueCorpus{}, path);
  CHECK(std::filesystem::file_size(path) == 0);
  CHECK(load_corpus(path).empty());
}

TEST_CASE("non-ASCII text survives byte for byte") {
  DialogueCorpus corpus;
  const std::string persona = "J’aime la crème brûlée, 東京 \xF0\x9F\x97\xA1 “quoted”";
  corpus.add(Dialogue{"u", std::nullopt,
                      {Character{"bard", persona, GenderLabel::kNeutral}},
                      {Utterance{0, "Ça va?"}}});
  const auto path = TmpPath("utf8.jsonl");
  write_corpus(corpus, path);
  const DialogueCorpus back = load_corpus(path);
  CHECK(back[0].characters[0].persona == persona);
  CHECK(back[0].turns[0].text == "Ça va?");
  CHECK(read_file(path).find(persona) != std::string::npos);
}

TEST_CASE("missing file is an I/O error") {
  CHECK_THROWS_AS(load_corpus(TmpPath("nope/none.jsonl")), IoError);
}

TEST_CASE("token counts add over dialogues") {
  const DialogueCorpus corpus = gen::RandomCorpus(99, 40);
  std::size_t sum = 0;
  std::size_t expected = 0;
  for (const Dialogue& d : corpus) {
    sum += token_count(d);
    for (const Utterance& u : d.turns) expected += oracle::Tokens(u.text).size();
  }
  CHECK(token_count(corpus) == sum);
  CHECK(sum == expected);
}

TEST_CASE("filter_split keeps matching dialogues in order") {
  const DialogueCorpus corpus = gen::RandomCorpus(7, 60);
  const DialogueCorpus train = filter_split(corpus, "train");
  const DialogueCorpus test = filter_split(corpus, "test");
  std::size_t untagged = 0;
  for (const Dialogue& d : corpus) untagged += d.split.has_value() ? 0 : 1;
  CHECK(train.size() + test.size() + untagged == corpus.size());
  for (const Dialogue& d : train) CHECK(d.split == "train");
  CHECK(filter_split(corpus, "valid").empty());
}

TEST_CASE("gender label codes") {
  for (auto label : {GenderLabel::kFemale, GenderLabel::kMale,
                     GenderLabel::kNeutral, GenderLabel::kUnknown}) {
    CHECK(parse_gender_label(to_code(label)) == label);
  }
  CHECK_FALSE(parse_gender_label("f").has_value());
}
