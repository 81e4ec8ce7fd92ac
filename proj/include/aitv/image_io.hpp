#pragma once

#include <string>

#include "aitv/aicv.hpp"

namespace aitv {

// PNG in/out, 8-bit. Math stays in double [0,1]; quantization happens only at
// write time (round to 0..255). Reads expand palette/16-bit/alpha inputs to
// 8-bit gray or RGB. force_grayscale collapses color input with the BT.601
// luminance weights 0.299/0.587/0.114.
Image read_png(const std::string& path, bool force_grayscale = false);
void write_png(const std::string& path, const Image& img);
void write_png(const std::string& path, const ScalarField& gray);

// Labels are stored as distinct gray levels spread over 0..255:
// level(ell) = round((ell-1) * 255 / (N-1)) for N >= 2, 0 for N = 1.
// Reading requires N and rejects files whose levels don't match the map.
int label_gray_level(int ell, int num_regions);
void write_label_png(const std::string& path, const LabelMap& labels, int num_regions);
LabelMap read_label_png(const std::string& path, int num_regions);

} // namespace aitv
