#pragma once

#include <array>
#include <string>
#include <vector>

namespace si::nifti {

// Decoded single-file NIfTI-1 volume. Data is stored in file order
// (x fastest, then y, z, t) with scl_slope/scl_inter applied.
struct NiftiVolume {
    int nx = 0, ny = 0, nz = 0, nt = 0;
    std::array<float, 3> spacing = {1.0f, 1.0f, 1.0f};
    std::vector<float> data;

    float at(int x, int y, int z, int t) const {
        return data[((static_cast<size_t>(t) * nz + z) * ny + y) * nx + x];
    }
};

// Reads .nii or .nii.gz. Supports uint8/int16/uint16/int32/float32/float64
// payloads and byte-swapped files. Throws IoError on unreadable files and
// FormatError on malformed ones.
NiftiVolume read_nifti(const std::string& path);

// Writes a float32 single-file NIfTI-1 volume (gzipped when the path ends in
// .gz). Data must be in file order, length nx*ny*nz*nt.
void write_nifti(const std::string& path, const NiftiVolume& vol);

}  // namespace si::nifti
