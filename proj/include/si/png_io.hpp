#pragma once

#include <string>
#include <vector>

#include "si/image.hpp"

namespace si::pngio {

// 8-bit grayscale PNG, row-major bytes, length h*w.
void write_gray8(const std::string& path, int h, int w,
                 const std::vector<uint8_t>& pixels);

// Renders one channel of each image side by side (min/max scaled per panel,
// 2px separator). Used for mixture/prediction/target triptychs.
void write_panel(const std::string& path, const std::vector<Image>& panels,
                 int channel = 0);

// Simple bar-chart rendering of a histogram (one bar per bin).
void write_histogram(const std::string& path, const std::vector<long>& counts,
                     int height = 160, int bar_width = 8);

}  // namespace si::pngio
