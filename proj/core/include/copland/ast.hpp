/*
 * Copyright (c) 2026, the Copland toolkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
*/

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace copland {

using Nat = std::uint64_t;

/// An attestation manager execution domain, identified by a natural number.
struct Place {
  Nat id = 0;
  friend auto operator<=>(const Place&, const Place&) = default;
};

/// Static parameters of an Attestation Service Provider: which measurement,
/// its arguments, the place hosting the measured target, and the target.
struct AspSpec {
  Nat asp_id = 0;
  std::vector<std::string> args;
  Place place;
  Nat target_id = 0;
  friend bool operator==(const AspSpec&, const AspSpec&) = default;
};

/// Evidence selector for one side of a branch: pass everything or nothing.
enum class Select : std::uint8_t { All, None };

struct SplitSpec {
  Select left = Select::All;
  Select right = Select::All;
  friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

class Phrase;
using PhrasePtr = std::shared_ptr<const Phrase>;

struct AspNode {
  AspSpec spec;
};
struct CpyNode {};
struct SigNode {};
struct HshNode {};
struct AtNode {
  Place place;
  PhrasePtr body;
};
struct LSeqNode {
  PhrasePtr first;
  PhrasePtr second;
};
struct BSeqNode {
  SplitSpec split;
  PhrasePtr left;
  PhrasePtr right;
};
struct BParNode {
  SplitSpec split;
  PhrasePtr left;
  PhrasePtr right;
};

/// A Copland phrase: what to measure, where, and in what order.
/// Immutable; share freely across threads.
class Phrase {
 public:
  using Node = std::variant<AspNode, CpyNode, SigNode, HshNode, AtNode,
                            LSeqNode, BSeqNode, BParNode>;

  explicit Phrase(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }

 private:
  Node node_;
};

bool operator==(const Phrase& a, const Phrase& b);
inline bool operator!=(const Phrase& a, const Phrase& b) { return !(a == b); }

PhrasePtr asp(AspSpec spec);
PhrasePtr cpy();
PhrasePtr sig();
PhrasePtr hsh();
PhrasePtr at(Place place, PhrasePtr body);
PhrasePtr lseq(PhrasePtr first, PhrasePtr second);
PhrasePtr bseq(SplitSpec split, PhrasePtr left, PhrasePtr right);
PhrasePtr bpar(SplitSpec split, PhrasePtr left, PhrasePtr right);

/// Half-open range [lo, hi) of event identifiers owned by a subterm.
struct Range {
  Nat lo = 0;
  Nat hi = 0;
  friend bool operator==(const Range&, const Range&) = default;
};

class AnnoPhrase;
using AnnoPhrasePtr = std::shared_ptr<const AnnoPhrase>;

struct AnnoAtNode {
  Place place;
  AnnoPhrasePtr body;
};
struct AnnoLSeqNode {
  AnnoPhrasePtr first;
  AnnoPhrasePtr second;
};
struct AnnoBSeqNode {
  SplitSpec split;
  AnnoPhrasePtr left;
  AnnoPhrasePtr right;
};
struct AnnoBParNode {
  SplitSpec split;
  AnnoPhrasePtr left;
  AnnoPhrasePtr right;
};

/// A Copland phrase whose every node carries the event-id range it owns.
class AnnoPhrase {
 public:
  using Node = std::variant<AspNode, CpyNode, SigNode, HshNode, AnnoAtNode,
                            AnnoLSeqNode, AnnoBSeqNode, AnnoBParNode>;

  AnnoPhrase(Range range, Node node) : range_(range), node_(std::move(node)) {}

  const Range& range() const { return range_; }
  const Node& node() const { return node_; }

 private:
  Range range_;
  Node node_;
};

bool operator==(const AnnoPhrase& a, const AnnoPhrase& b);
inline bool operator!=(const AnnoPhrase& a, const AnnoPhrase& b) {
  return !(a == b);
}

AnnoPhrasePtr anno_asp(Range r, AspSpec spec);
AnnoPhrasePtr anno_cpy(Range r);
AnnoPhrasePtr anno_sig(Range r);
AnnoPhrasePtr anno_hsh(Range r);
AnnoPhrasePtr anno_at(Range r, Place place, AnnoPhrasePtr body);
AnnoPhrasePtr anno_lseq(Range r, AnnoPhrasePtr first, AnnoPhrasePtr second);
AnnoPhrasePtr anno_bseq(Range r, SplitSpec split, AnnoPhrasePtr left,
                        AnnoPhrasePtr right);
AnnoPhrasePtr anno_bpar(Range r, SplitSpec split, AnnoPhrasePtr left,
                        AnnoPhrasePtr right);

struct AnnotateResult {
  AnnoPhrasePtr term;
  Nat next;  // first identifier not consumed by `term`
};

/// Assigns a unique event identifier to every system event the phrase will
/// produce, starting at `start`. Leaves own one id; remote requests own a
/// request id up front and a reply id at the end; branches own a split id up
/// front and a join id at the end; linear sequences own none of their own.
AnnotateResult annotate(const PhrasePtr& t, Nat start);

/// Strips all ranges, preserving structure.
PhrasePtr unanno(const AnnoPhrasePtr& at);

/// True iff `at` is exactly what annotate(unanno(at), at.range().lo) yields.
/// Holding this guarantees sibling ranges never overlap.
bool well_formed(const AnnoPhrasePtr& at);

}  // namespace copland
