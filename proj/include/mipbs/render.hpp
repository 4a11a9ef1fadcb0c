#pragma once

#include <iosfwd>

#include "mipbs/mbs.hpp"

namespace mipbs {

struct RenderOptions {
  bool annotate = false;  // print penetration depth on every overlapping pair
};

// SVG 1.1; viewBox fitted to the disks and labelled points.
void render_svg(std::ostream& out, const MbsInstance& inst, const RenderOptions& options = {});

}  // namespace mipbs
