#include "si/nifti.hpp"

#include <zlib.h>

#include <cstring>
#include <fstream>

#include "si/errors.hpp"

namespace si::nifti {
namespace {

#pragma pack(push, 1)
struct Nifti1Header {
    int32_t sizeof_hdr;
    char data_type[10];
    char db_name[18];
    int32_t extents;
    int16_t session_error;
    char regular;
    char dim_info;
    int16_t dim[8];
    float intent_p1, intent_p2, intent_p3;
    int16_t intent_code;
    int16_t datatype;
    int16_t bitpix;
    int16_t slice_start;
    float pixdim[8];
    float vox_offset;
    float scl_slope;
    float scl_inter;
    int16_t slice_end;
    char slice_code;
    char xyzt_units;
    float cal_max, cal_min;
    float slice_duration;
    float toffset;
    int32_t glmax, glmin;
    char descrip[80];
    char aux_file[24];
    int16_t qform_code, sform_code;
    float quatern_b, quatern_c, quatern_d;
    float qoffset_x, qoffset_y, qoffset_z;
    float srow_x[4], srow_y[4], srow_z[4];
    char intent_name[16];
    char magic[4];
};
#pragma pack(pop)
static_assert(sizeof(Nifti1Header) == 348, "NIfTI-1 header must be 348 bytes");

constexpr int16_t kDtUint8 = 2;
constexpr int16_t kDtInt16 = 4;
constexpr int16_t kDtInt32 = 8;
constexpr int16_t kDtFloat32 = 16;
constexpr int16_t kDtFloat64 = 64;
constexpr int16_t kDtUint16 = 512;

template <typename T>
T bswap(T v) {
    unsigned char* p = reinterpret_cast<unsigned char*>(&v);
    for (size_t i = 0; i < sizeof(T) / 2; ++i)
        std::swap(p[i], p[sizeof(T) - 1 - i]);
    return v;
}

void swap_header(Nifti1Header& h) {
    h.sizeof_hdr = bswap(h.sizeof_hdr);
    for (auto& d : h.dim) d = bswap(d);
    h.datatype = bswap(h.datatype);
    h.bitpix = bswap(h.bitpix);
    for (auto& p : h.pixdim) p = bswap(p);
    h.vox_offset = bswap(h.vox_offset);
    h.scl_slope = bswap(h.scl_slope);
    h.scl_inter = bswap(h.scl_inter);
}

struct GzFile {
    gzFile f = nullptr;
    explicit GzFile(const std::string& path, const char* mode) {
        f = gzopen(path.c_str(), mode);
    }
    ~GzFile() {
        if (f) gzclose(f);
    }
    GzFile(const GzFile&) = delete;
    GzFile& operator=(const GzFile&) = delete;
};

void read_exact(gzFile f, void* dst, size_t bytes, const std::string& path) {
    size_t got = 0;
    char* p = static_cast<char*>(dst);
    while (got < bytes) {
        const unsigned chunk = static_cast<unsigned>(
            std::min<size_t>(bytes - got, 1u << 26));
        const int n = gzread(f, p + got, chunk);
        if (n <= 0) throw FormatError("truncated NIfTI file: " + path);
        got += static_cast<size_t>(n);
    }
}

template <typename T>
void decode(const std::vector<char>& raw, size_t count, bool swapped,
            float slope, float inter, std::vector<float>& out) {
    const T* src = reinterpret_cast<const T*>(raw.data());
    out.resize(count);
    for (size_t i = 0; i < count; ++i) {
        T v = src[i];
        if (swapped) v = bswap(v);
        out[i] = static_cast<float>(v) * slope + inter;
    }
}

}  // namespace

NiftiVolume read_nifti(const std::string& path) {
    GzFile gz(path, "rb");
    if (!gz.f) throw IoError("cannot open NIfTI file: " + path);

    Nifti1Header hdr{};
    read_exact(gz.f, &hdr, sizeof(hdr), path);

    bool swapped = false;
    if (hdr.sizeof_hdr != 348) {
        swap_header(hdr);
        if (hdr.sizeof_hdr != 348)
            throw FormatError("not a NIfTI-1 file (bad sizeof_hdr): " + path);
        swapped = true;
    }
    if (std::strncmp(hdr.magic, "n+1", 3) != 0 &&
        std::strncmp(hdr.magic, "ni1", 3) != 0)
        throw FormatError("not a NIfTI-1 file (bad magic): " + path);
    if (hdr.dim[0] < 2 || hdr.dim[0] > 4)
        throw FormatError("unsupported NIfTI dimensionality " +
                          std::to_string(hdr.dim[0]) + ": " + path);

    NiftiVolume vol;
    vol.nx = hdr.dim[1];
    vol.ny = hdr.dim[2];
    vol.nz = hdr.dim[0] >= 3 ? std::max<int>(1, hdr.dim[3]) : 1;
    vol.nt = hdr.dim[0] >= 4 ? std::max<int>(1, hdr.dim[4]) : 1;
    if (vol.nx <= 0 || vol.ny <= 0)
        throw FormatError("bad NIfTI dims: " + path);
    for (int i = 0; i < 3; ++i) {
        const float p = hdr.pixdim[i + 1];
        vol.spacing[static_cast<size_t>(i)] = p > 0.0f ? p : 1.0f;
    }

    const size_t count = static_cast<size_t>(vol.nx) * vol.ny * vol.nz * vol.nt;
    const size_t elem = static_cast<size_t>(hdr.bitpix) / 8;
    const float slope = hdr.scl_slope != 0.0f ? hdr.scl_slope : 1.0f;
    const float inter = hdr.scl_slope != 0.0f ? hdr.scl_inter : 0.0f;

    // Skip any header extension up to vox_offset.
    const long offset = static_cast<long>(hdr.vox_offset);
    if (offset > static_cast<long>(sizeof(hdr))) {
        std::vector<char> skip(static_cast<size_t>(offset) - sizeof(hdr));
        if (!skip.empty()) read_exact(gz.f, skip.data(), skip.size(), path);
    }

    std::vector<char> raw(count * elem);
    read_exact(gz.f, raw.data(), raw.size(), path);

    switch (hdr.datatype) {
        case kDtUint8:
            decode<uint8_t>(raw, count, false, slope, inter, vol.data);
            break;
        case kDtInt16:
            decode<int16_t>(raw, count, swapped, slope, inter, vol.data);
            break;
        case kDtUint16:
            decode<uint16_t>(raw, count, swapped, slope, inter, vol.data);
            break;
        case kDtInt32:
            decode<int32_t>(raw, count, swapped, slope, inter, vol.data);
            break;
        case kDtFloat32:
            decode<float>(raw, count, swapped, slope, inter, vol.data);
            break;
        case kDtFloat64:
            decode<double>(raw, count, swapped, slope, inter, vol.data);
            break;
        default:
            throw FormatError("unsupported NIfTI datatype " +
                              std::to_string(hdr.datatype) + ": " + path);
    }
    return vol;
}

void write_nifti(const std::string& path, const NiftiVolume& vol) {
    const size_t count =
        static_cast<size_t>(vol.nx) * vol.ny * vol.nz * vol.nt;
    if (vol.data.size() != count)
        throw DomainError("write_nifti: data size does not match dims");

    Nifti1Header hdr{};
    hdr.sizeof_hdr = 348;
    hdr.dim[0] = static_cast<int16_t>(vol.nt > 1 ? 4 : 3);
    hdr.dim[1] = static_cast<int16_t>(vol.nx);
    hdr.dim[2] = static_cast<int16_t>(vol.ny);
    hdr.dim[3] = static_cast<int16_t>(vol.nz);
    hdr.dim[4] = static_cast<int16_t>(std::max(1, vol.nt));
    for (int i = 5; i < 8; ++i) hdr.dim[i] = 1;
    hdr.datatype = kDtFloat32;
    hdr.bitpix = 32;
    hdr.pixdim[0] = 1.0f;
    for (int i = 0; i < 3; ++i)
        hdr.pixdim[i + 1] = vol.spacing[static_cast<size_t>(i)];
    hdr.pixdim[4] = 1.0f;
    hdr.vox_offset = 352.0f;
    hdr.scl_slope = 1.0f;
    hdr.scl_inter = 0.0f;
    std::memcpy(hdr.magic, "n+1", 4);
    const char pad[4] = {0, 0, 0, 0};

    const bool gzipped = path.size() > 3 && path.ends_with(".gz");
    if (gzipped) {
        GzFile gz(path, "wb");
        if (!gz.f) throw IoError("cannot write NIfTI file: " + path);
        if (gzwrite(gz.f, &hdr, sizeof(hdr)) != static_cast<int>(sizeof(hdr)) ||
            gzwrite(gz.f, pad, 4) != 4 ||
            gzwrite(gz.f, vol.data.data(),
                    static_cast<unsigned>(count * 4)) !=
                static_cast<int>(count * 4))
            throw IoError("short write: " + path);
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot write NIfTI file: " + path);
        out.write(reinterpret_cast<const char*>(&hdr), sizeof(hdr));
        out.write(pad, 4);
        out.write(reinterpret_cast<const char*>(vol.data.data()),
                  static_cast<std::streamsize>(count * 4));
        if (!out) throw IoError("short write: " + path);
    }
}

}  // namespace si::nifti
