#pragma once

#include <iosfwd>
#include <string>

#include "tamesys/matrix.hpp"
#include "tamesys/point.hpp"
#include "tamesys/search.hpp"

namespace tamesys {

/// Matrix text format: first line `q=<order>` for prime fields or
/// `q=<p>^<e> poly=<c0,c1,...,1>` for extension fields, then one
/// whitespace-separated row per line. Entries are canonical integers in
/// [0, q); negative literals are accepted and reduced.
Mat read_matrix(std::istream& in);
Mat read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Mat& m);

/// Tuple format: `n=<dim>` then k lines of n integers.
Tuple read_tuple(std::istream& in, const FieldPtr& f);
Tuple read_tuple_file(const std::string& path, const FieldPtr& f);
void write_tuple(std::ostream& out, const Tuple& x);

/// Point sets: `n=<dim>` then newline-separated point codes.
PointSet read_pointset(std::istream& in, const FieldPtr& f);
PointSet read_pointset_file(const std::string& path, const FieldPtr& f);
void write_pointset(std::ostream& out, const PointSet& s);

}  // namespace tamesys
