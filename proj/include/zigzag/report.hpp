#pragma once

#include <string>
#include <vector>

#include "zigzag/triangulation.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

/// "2 zigzags × length 18", or the individual lengths when they differ.
std::string format_census(const std::vector<Zigzag>& zigzags);

/// `z <index> <length>` followed by the passes as `u>v`, per zigzag.
std::string format_zigzag_listing(const Triangulation& t, const std::vector<Zigzag>& zigzags);

/// `E <u> <v> I`, `E <u> <v> II <from> <to>`, `V <v> I|II`, `F <a> <b> <c> I|II`.
std::string format_classification(const Triangulation& t, const Classification& c);

/// Plain-text analysis: counts, census, classification, homogeneity, the
/// in/out balance at type-II vertices and, for z-knotted homogeneous input,
/// the special pairs.
std::string analyze_report(const Triangulation& t, const ZOrientation& tau);

/// The same facts as `key<TAB>value` lines.
std::string analyze_tsv(const Triangulation& t, const ZOrientation& tau);

/// DOT text. Without a classification every edge is plain; with one, the
/// type-II edges are drawn bold in their direction.
std::string export_dot(const Triangulation& t, const Classification* c = nullptr);

}  // namespace zigzag
