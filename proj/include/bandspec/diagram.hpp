#ifndef BANDSPEC_DIAGRAM_HPP
#define BANDSPEC_DIAGRAM_HPP

#include <string>

#include "bandspec/spectrum_set.hpp"

namespace bandspec {

/// SVG band diagram: each band a horizontal bar over a real axis with its
/// endpoints labelled. Atoms (zero-length bands) render as marks of fixed
/// minimal width so they stay visible. Output is a pure function of the
/// inputs.
std::string render_band_diagram(const SpectrumSet& s, const std::string& title);

/// Renders and writes the diagram; throws std::runtime_error when the path
/// cannot be opened for writing.
void write_band_diagram(const SpectrumSet& s, const std::string& title,
                        const std::string& path);

}  // namespace bandspec

#endif  // BANDSPEC_DIAGRAM_HPP
