#include "skillscope/io/jpeg_codec.hpp"

#include <cstdio>
#include <jpeglib.h>

#include <algorithm>
#include <csetjmp>
#include <cstdlib>
#include <string>

#include "skillscope/core/error.hpp"
#include "skillscope/io/image_io.hpp"

namespace skillscope {
namespace {

constexpr QuantTable kLuma{16, 11, 10, 16, 24,  40,  51,  61,  12, 12, 14, 19, 26,  58,  60,  55,
                           14, 13, 16, 24, 40,  57,  69,  56,  14, 17, 22, 29, 51,  87,  80,  62,
                           18, 22, 37, 56, 68,  109, 103, 77,  24, 35, 55, 64, 81,  104, 113, 92,
                           49, 64, 78, 87, 103, 121, 120, 101, 72, 92, 95, 98, 112, 100, 103, 99};

constexpr QuantTable kChroma{17, 18, 24, 47, 99, 99, 99, 99, 18, 21, 26, 66, 99, 99, 99, 99,
                             24, 26, 56, 99, 99, 99, 99, 99, 47, 66, 99, 99, 99, 99, 99, 99,
                             99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99,
                             99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99, 99};

struct ErrorManager {
  jpeg_error_mgr pub;
  std::jmp_buf jump;
  char message[JMSG_LENGTH_MAX];
};

void error_exit(j_common_ptr cinfo) {
  auto* err = reinterpret_cast<ErrorManager*>(cinfo->err);
  (*cinfo->err->format_message)(cinfo, err->message);
  std::longjmp(err->jump, 1);
}

}  // namespace

const QuantTable& annex_k_luma() { return kLuma; }
const QuantTable& annex_k_chroma() { return kChroma; }

QuantTable scale_quant_table(const QuantTable& base, int quality) {
  if (quality < 1 || quality > 100) {
    throw Error(ErrorCode::InvalidSpec, "JPEG quality must be in 1..100, got " + std::to_string(quality));
  }
  const long scale = std::max(1L, quality < 50 ? 5000L / quality : 200L - 2L * quality);
  QuantTable out{};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const long q = (static_cast<long>(base[i]) * scale + 50) / 100;
    out[i] = static_cast<std::uint16_t>(std::clamp(q, 1L, 255L));
  }
  return out;
}

std::vector<std::uint8_t> encode_jpeg(const Pixels& pixels, int quality) {
  const QuantTable luma = scale_quant_table(kLuma, quality);
  const QuantTable chroma = scale_quant_table(kChroma, quality);
  std::array<unsigned int, 64> luma_ui{};
  std::array<unsigned int, 64> chroma_ui{};
  std::copy(luma.begin(), luma.end(), luma_ui.begin());
  std::copy(chroma.begin(), chroma.end(), chroma_ui.begin());

  const auto samples = quantize_8bit(pixels);
  jpeg_compress_struct cinfo{};
  ErrorManager jerr{};
  unsigned char* outbuf = nullptr;
  unsigned long outsize = 0;
  cinfo.err = jpeg_std_error(&jerr.pub);
  jerr.pub.error_exit = error_exit;
  if (setjmp(jerr.jump)) {
    jpeg_destroy_compress(&cinfo);
    std::free(outbuf);
    throw Error(ErrorCode::IoError, std::string("jpeg encode: ") + jerr.message);
  }
  jpeg_create_compress(&cinfo);
  jpeg_mem_dest(&cinfo, &outbuf, &outsize);
  cinfo.image_width = static_cast<JDIMENSION>(pixels.width());
  cinfo.image_height = static_cast<JDIMENSION>(pixels.height());
  cinfo.input_components = pixels.channels();
  cinfo.in_color_space = pixels.channels() == 3 ? JCS_RGB : JCS_GRAYSCALE;
  jpeg_set_defaults(&cinfo);
  cinfo.dct_method = JDCT_ISLOW;
  // Scale factor 100 installs the already-scaled tables unchanged.
  jpeg_add_quant_table(&cinfo, 0, luma_ui.data(), 100, TRUE);
  jpeg_add_quant_table(&cinfo, 1, chroma_ui.data(), 100, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  const std::size_t stride = static_cast<std::size_t>(pixels.width()) * pixels.channels();
  while (cinfo.next_scanline < cinfo.image_height) {
    auto* row = const_cast<JSAMPLE*>(samples.data() + cinfo.next_scanline * stride);
    jpeg_write_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
  std::vector<std::uint8_t> out(outbuf, outbuf + outsize);
  std::free(outbuf);
  return out;
}

}  // namespace skillscope
