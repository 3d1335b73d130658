#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tura/corpus.h"
#include "tura/dataset.h"
#include "tura/features.h"
#include "tura/random.h"

namespace tura::testing {

inline Token tok(std::string surface, std::string lemma, Upos upos, int head,
                 std::string deprel, std::string ne = "O") {
  Token t;
  t.surface = std::move(surface);
  t.lemma = std::move(lemma);
  t.upos = upos;
  t.head = head;
  t.deprel = std::move(deprel);
  t.entity_tag = std::move(ne);
  return t;
}

inline Document make_doc(std::string id, ReadingLevel level, std::vector<Sentence> sentences) {
  Document d;
  d.doc_id = std::move(id);
  d.level = level;
  d.sentences = std::move(sentences);
  return d;
}

// Random well-formed document: every sentence is a tree over its tokens,
// tags and relations are drawn from the full inventories (plus subtypes and
// non-UD labels), some tokens carry entity tags.
Document random_document(Rng& rng, const std::string& id, bool trees = false);

// Random dataset with small-integer feature values (lots of ties).
Dataset random_dataset(Rng& rng, std::size_t rows, std::size_t cols, int classes,
                       int value_range);

// Matrix built from a dataset, with named TRAD-like columns.
FeatureMatrix matrix_from_dataset(const Dataset& data);

}  // namespace tura::testing
