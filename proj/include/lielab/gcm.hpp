#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lielab/rational.hpp"

namespace lielab {

using IntMatrix = std::vector<std::vector<int>>;

enum class GcmBucket { Finite, Affine, IndefiniteHyperbolic, IndefiniteNonHyperbolic };

std::string to_string(GcmBucket b);  // "FINITE", "AFFINE", ...
GcmBucket bucket_from_string(std::string_view s);

// Throws NotAGCM naming the first violated constraint.
void validate_gcm(const IntMatrix& a);

// Vertex sets (0-based, ascending) of the connected components of the Dynkin
// graph, ordered by smallest vertex.
std::vector<std::vector<int>> component_vertices(const IntMatrix& a);
std::vector<IntMatrix> components(const IntMatrix& a);
IntMatrix principal_submatrix(const IntMatrix& a, const std::vector<int>& vertices);

struct ComponentVerdict {
  std::vector<int> vertices;
  IntMatrix matrix;
  GcmBucket bucket = GcmBucket::Finite;
  std::string name;  // empty when not in the name table
};

struct GcmVerdict {
  // The most severe component bucket, in the order finite < affine < hyperbolic < non-hyperbolic.
  GcmBucket bucket = GcmBucket::Finite;
  std::vector<ComponentVerdict> components;
  bool decomposable() const { return components.size() > 1; }
  std::string name() const;  // component names joined with " x "; empty if any is unnamed
};

GcmVerdict classify(const IntMatrix& a);
// Bucket of a connected GCM by the principal-minor criterion.
GcmBucket classify_indecomposable(const IntMatrix& a);

// Finite or affine type name ("G2", "A1^(1)", "A4^(2)") of a connected GCM, matched
// up to simultaneous permutation against a built-in table; empty if unknown.
std::string gcm_name(const IntMatrix& a);

Integer integer_determinant(const IntMatrix& a);

// "2 -2; -2 2"
IntMatrix parse_gcm(std::string_view text);
std::string format_gcm(const IntMatrix& a);

nlohmann::ordered_json to_json(const GcmVerdict& v);

}  // namespace lielab
