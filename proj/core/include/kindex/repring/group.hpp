#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/repring/cyclotomic.hpp"

namespace kindex {

struct ConjugacyClass {
  std::string name;
  long size = 1;
  long element_order = 1;
};

// Finite group by its character table, or the circle group (is_circle), whose
// irreducibles are the characters z^n indexed by all integers.
struct GroupData {
  std::string name;
  long order = 1;
  std::vector<ConjugacyClass> classes;
  std::vector<std::string> irreps;
  // table[alpha][c]: value of irreducible alpha on class c.
  std::vector<std::vector<Cyclotomic>> table;
  bool is_circle = false;

  std::size_t irrep_count() const { return irreps.size(); }
  long dimension(std::size_t alpha) const;
};

using GroupPtr = std::shared_ptr<const GroupData>;

// Checks class sizes, row and column orthogonality and sum dim^2 = |G|.
void validate_group(const GroupData& g);

// trivial, z<k>, z<a>xz<b>, s3, circle.
GroupPtr builtin_group(std::string_view name);

struct SubgroupEmbedding {
  std::string name;
  GroupPtr ambient;
  GroupPtr subgroup;
  // For finite ambient groups: ambient class of each subgroup class.
  std::vector<std::size_t> class_map;
  // For the circle ambient: subgroup class j is the rotation by
  // 2 pi * rotation[j] / circle_denominator.
  std::vector<long> rotation;
  long circle_denominator = 1;
};

// Checks class-map shapes, element orders and class-size divisibility.
void validate_embedding(const SubgroupEmbedding& e);

// z<k>_in_z<n> (k | n), z3_in_s3, z2_in_s3, trivial_in_<G>, z<k>_in_circle.
SubgroupEmbedding builtin_embedding(std::string_view name);

std::vector<std::string> builtin_group_names();
std::vector<std::string> builtin_embedding_names();

}  // namespace kindex
