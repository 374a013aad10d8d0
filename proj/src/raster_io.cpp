#include "docaug/raster_io.hpp"

#include <zlib.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

namespace docaug {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error(path.string() + ": " + what);
}

// Next PNM header token, skipping whitespace and '#' comment lines.
std::string pnm_token(std::istream& in) {
    std::string tok;
    int c = in.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = in.get();
        } else if (std::isspace(c)) {
            c = in.get();
        } else {
            break;
        }
    }
    while (c != EOF && !std::isspace(c)) {
        tok.push_back(static_cast<char>(c));
        c = in.get();
    }
    return tok;
}

int parse_dim(std::istream& in, const std::filesystem::path& path, const char* name) {
    const std::string tok = pnm_token(in);
    if (tok.empty()) fail(path, std::string("malformed header: missing ") + name);
    int value = 0;
    try {
        value = std::stoi(tok);
    } catch (const std::exception&) {
        fail(path, std::string("malformed header: bad ") + name + " '" + tok + "'");
    }
    if (value < 1) fail(path, std::string("malformed header: ") + name + " must be >= 1");
    return value;
}

Raster load_pnm(std::ifstream& in, const std::filesystem::path& path, int channels) {
    const int width = parse_dim(in, path, "width");
    const int height = parse_dim(in, path, "height");
    const std::string maxval = pnm_token(in);
    if (maxval.empty()) fail(path, "malformed header: missing maxval");
    if (maxval != "255") fail(path, "unsupported bit depth (maxval " + maxval + ", expected 255)");
    // The maxval token consumed exactly one trailing whitespace byte; raw
    // samples start here.
    Raster img(width, height, channels);
    in.read(reinterpret_cast<char*>(img.data.data()),
            static_cast<std::streamsize>(img.data.size()));
    if (static_cast<std::size_t>(in.gcount()) != img.data.size())
        fail(path, "truncated pixel data");
    return img;
}

// ---- PNG (read-only, 8-bit, non-interlaced) ----

std::uint32_t be32(const unsigned char* p) {
    return (std::uint32_t(p[0]) << 24) | (std::uint32_t(p[1]) << 16) |
           (std::uint32_t(p[2]) << 8) | std::uint32_t(p[3]);
}

int paeth(int a, int b, int c) {
    const int p = a + b - c;
    const int pa = std::abs(p - a);
    const int pb = std::abs(p - b);
    const int pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

std::vector<unsigned char> zlib_inflate(const std::vector<unsigned char>& in,
                                        std::size_t expected,
                                        const std::filesystem::path& path) {
    std::vector<unsigned char> out(expected);
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) fail(path, "zlib init failed");
    zs.next_in = const_cast<unsigned char*>(in.data());
    zs.avail_in = static_cast<uInt>(in.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    const int rc = inflate(&zs, Z_FINISH);
    const std::size_t produced = out.size() - zs.avail_out;
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || produced != expected)
        fail(path, "corrupt PNG pixel stream");
    return out;
}

// Flatten a sample with alpha onto white paper.
std::uint8_t over_white(int v, int a) {
    return to_u8((v * a + 255.0 * (255 - a)) / 255.0);
}

Raster load_png(std::ifstream& in, const std::filesystem::path& path) {
    unsigned char sig[8];
    in.read(reinterpret_cast<char*>(sig), 8);
    static const unsigned char kMagic[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    if (in.gcount() != 8 || std::memcmp(sig, kMagic, 8) != 0)
        fail(path, "malformed PNG signature");

    std::uint32_t width = 0, height = 0;
    int bit_depth = -1, color_type = -1;
    std::vector<unsigned char> palette;       // RGB triples
    std::vector<unsigned char> palette_alpha; // tRNS, per palette index
    std::vector<unsigned char> idat;
    bool seen_ihdr = false, seen_iend = false;

    while (!seen_iend) {
        unsigned char hdr[8];
        in.read(reinterpret_cast<char*>(hdr), 8);
        if (in.gcount() != 8) fail(path, "truncated PNG chunk header");
        const std::uint32_t length = be32(hdr);
        const std::string type(reinterpret_cast<char*>(hdr) + 4, 4);
        std::vector<unsigned char> body(length);
        in.read(reinterpret_cast<char*>(body.data()), length);
        if (static_cast<std::uint32_t>(in.gcount()) != length)
            fail(path, "truncated PNG chunk '" + type + "'");
        in.ignore(4); // CRC

        if (type == "IHDR") {
            if (length != 13) fail(path, "malformed IHDR");
            width = be32(body.data());
            height = be32(body.data() + 4);
            bit_depth = body[8];
            color_type = body[9];
            if (body[12] != 0) fail(path, "unsupported interlaced PNG");
            if (bit_depth != 8) fail(path, "unsupported bit depth (" + std::to_string(bit_depth) + "-bit PNG)");
            if (color_type != 0 && color_type != 2 && color_type != 3 &&
                color_type != 4 && color_type != 6)
                fail(path, "unsupported PNG color type " + std::to_string(color_type));
            if (width == 0 || height == 0) fail(path, "malformed IHDR: zero dimension");
            seen_ihdr = true;
        } else if (type == "PLTE") {
            palette = body;
        } else if (type == "tRNS") {
            if (color_type == 3) palette_alpha = body;
        } else if (type == "IDAT") {
            idat.insert(idat.end(), body.begin(), body.end());
        } else if (type == "IEND") {
            seen_iend = true;
        }
        // Other ancillary chunks are skipped.
    }
    if (!seen_ihdr) fail(path, "missing IHDR");

    static const int kSamples[7] = {1, 0, 3, 1, 2, 0, 4};
    const int samples = kSamples[color_type];
    const std::size_t stride = static_cast<std::size_t>(width) * samples;
    const std::size_t raw_size = (stride + 1) * height;
    const std::vector<unsigned char> raw = zlib_inflate(idat, raw_size, path);

    // Undo per-scanline filters in place.
    std::vector<unsigned char> pixels(stride * height);
    for (std::uint32_t y = 0; y < height; ++y) {
        const unsigned char filter = raw[y * (stride + 1)];
        const unsigned char* src = raw.data() + y * (stride + 1) + 1;
        unsigned char* dst = pixels.data() + y * stride;
        const unsigned char* up = y > 0 ? dst - stride : nullptr;
        for (std::size_t i = 0; i < stride; ++i) {
            const int left = i >= static_cast<std::size_t>(samples) ? dst[i - samples] : 0;
            const int above = up ? up[i] : 0;
            const int corner = (up && i >= static_cast<std::size_t>(samples)) ? up[i - samples] : 0;
            int v = src[i];
            switch (filter) {
            case 0: break;
            case 1: v += left; break;
            case 2: v += above; break;
            case 3: v += (left + above) / 2; break;
            case 4: v += paeth(left, above, corner); break;
            default: fail(path, "malformed PNG filter type");
            }
            dst[i] = static_cast<unsigned char>(v & 0xff);
        }
    }

    const int w = static_cast<int>(width);
    const int h = static_cast<int>(height);
    switch (color_type) {
    case 0: { // gray
        Raster img(w, h, 1);
        img.data.assign(pixels.begin(), pixels.end());
        return img;
    }
    case 2: { // RGB
        Raster img(w, h, 3);
        img.data.assign(pixels.begin(), pixels.end());
        return img;
    }
    case 3: { // palette
        if (palette.empty()) fail(path, "palette PNG missing PLTE");
        Raster img(w, h, 3);
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            const std::size_t idx = pixels[i];
            if (idx * 3 + 2 >= palette.size()) fail(path, "palette index out of range");
            const int a = idx < palette_alpha.size() ? palette_alpha[idx] : 255;
            for (int c = 0; c < 3; ++c)
                img.data[i * 3 + c] = over_white(palette[idx * 3 + c], a);
        }
        return img;
    }
    case 4: { // gray + alpha
        Raster img(w, h, 1);
        for (std::size_t i = 0; i < img.data.size(); ++i)
            img.data[i] = over_white(pixels[i * 2], pixels[i * 2 + 1]);
        return img;
    }
    default: { // 6: RGBA
        Raster img(w, h, 3);
        for (std::size_t i = 0; i < static_cast<std::size_t>(w) * h; ++i) {
            const int a = pixels[i * 4 + 3];
            for (int c = 0; c < 3; ++c)
                img.data[i * 3 + c] = over_white(pixels[i * 4 + c], a);
        }
        return img;
    }
    }
}

} // namespace

Raster load_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "unreadable file");
    const int m0 = in.get();
    const int m1 = in.get();
    if (m0 == 'P' && m1 == '5') return load_pnm(in, path, 1);
    if (m0 == 'P' && m1 == '6') return load_pnm(in, path, 3);
    if (m0 == 0x89 && m1 == 'P') {
        in.seekg(0);
        return load_png(in, path);
    }
    fail(path, "unrecognized image format (expected P5/P6 PNM or PNG)");
}

void save_image(const Raster& img, const std::filesystem::path& path) {
    if (img.channels != 1 && img.channels != 3)
        throw std::invalid_argument("save_image: raster must have 1 or 3 channels");
    if (img.empty()) throw std::invalid_argument("save_image: empty raster");
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open for writing");
    out << (img.channels == 1 ? "P5" : "P6") << "\n"
        << img.width << " " << img.height << "\n255\n";
    out.write(reinterpret_cast<const char*>(img.data.data()),
              static_cast<std::streamsize>(img.data.size()));
    if (!out) fail(path, "write failed");
}

} // namespace docaug
