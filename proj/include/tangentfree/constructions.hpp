#pragma once

// Explicit sets without tangents. Every constructor returns the point set and a
// certificate that records the advertised size, the size actually built, an
// independent tangent scan and the intersection spectrum.

#include <optional>
#include <string>
#include <vector>

#include "tangentfree/conic.hpp"
#include "tangentfree/tangency.hpp"

namespace tangentfree {

struct ConstructionCert {
  std::string name;
  long claimed_size = 0;
  long actual_size = 0;
  bool tangent_free = false;
  Spectrum spectrum;
  /// Set when the built size differs from the advertised formula.
  bool flagged = false;
  std::string note;

  bool valid() const { return tangent_free && actual_size > 0; }
  /// "VALID", "FLAGGED" (valid but size differs from the formula) or "INVALID".
  std::string status() const;
};

struct Construction {
  PointSet set;
  ConstructionCert cert;
};

/// Certificate for an arbitrary set against an advertised size.
ConstructionCert certify(const std::string& name, const PointSet& set, long claimed_size);

Json to_json(const ConstructionCert& cert);

/// Points of x = 0 and y = 0 except their common point <(0,0,1)>. Size 2q.
Construction trivial(const PlanePtr& plane);

/// Elements a with a, 1-a, a(a-1) all nonzero and 1-a, a(a-1) squares.
std::vector<Elem> find_valid_a(const Field& field);

/// Symmetric difference of Z^2 = XY and Z^2 = aXY. Throws InvalidA or
/// OddOrderRequired.
Construction two_conics(const PlanePtr& plane, Elem a);

/// Interior points of the conic. Throws QTooSmall for q < 5.
Construction interior_points(const ConicModel& conic);

/// Interior points off r external lines through the exterior point q_point.
/// The lines are the r lowest-indexed ones unless a seed asks for a random
/// choice. Throws RTooLarge or NotExterior.
Construction punctured_interior(const ConicModel& conic, int q_point, int r,
                                std::optional<unsigned> seed = std::nullopt);

/// Completion of {<(1,x,x^p)>} by its non-determined directions on x = 0.
/// Throws PrimeField when h = 1.
Construction frobenius_graph(const PlanePtr& plane);

/// Completion of {<(1,x,Tr(x))>} by its non-determined directions on x = 0.
/// Throws PrimeField when h = 1.
Construction trace_graph(const PlanePtr& plane);

/// Ten points, exactly ten 3-secants, three of them through each member and no
/// line with four or more members. Throws WrongSize.
bool verify_desargues(const PointSet& s);

}  // namespace tangentfree
