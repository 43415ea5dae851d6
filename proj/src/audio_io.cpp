#include "audio_io.hpp"

#include <cmath>
#include <cstring>

namespace tvd {

namespace {

std::uint16_t rd_u16(const std::vector<std::uint8_t>& b, std::size_t off) {
  return static_cast<std::uint16_t>(b[off] | (b[off + 1] << 8));
}

std::uint32_t rd_u32(const std::vector<std::uint8_t>& b, std::size_t off) {
  return static_cast<std::uint32_t>(b[off]) | (static_cast<std::uint32_t>(b[off + 1]) << 8) |
         (static_cast<std::uint32_t>(b[off + 2]) << 16) |
         (static_cast<std::uint32_t>(b[off + 3]) << 24);
}

void wr_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(static_cast<std::uint8_t>(v & 0xff));
  b.push_back(static_cast<std::uint8_t>(v >> 8));
}

void wr_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  b.push_back(static_cast<std::uint8_t>(v & 0xff));
  b.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
  b.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
  b.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
}

void wr_tag(std::vector<std::uint8_t>& b, const char* tag) {
  b.insert(b.end(), tag, tag + 4);
}

bool tag_is(const std::vector<std::uint8_t>& b, std::size_t off, const char* tag) {
  return std::memcmp(b.data() + off, tag, 4) == 0;
}

}  // namespace

AudioClip read_wav(const std::vector<std::uint8_t>& bytes) {
  if (bytes.size() < 12) throw wav_parse_error("truncated RIFF header", bytes.size());
  if (!tag_is(bytes, 0, "RIFF")) throw wav_parse_error("missing RIFF tag", 0);
  if (!tag_is(bytes, 8, "WAVE")) throw wav_parse_error("missing WAVE tag", 8);

  bool have_fmt = false;
  std::uint16_t channels = 0, bits = 0, block_align = 0;
  std::uint32_t rate = 0;
  const std::uint8_t* data = nullptr;
  std::size_t data_len = 0, data_off = 0;

  std::size_t off = 12;
  while (off + 8 <= bytes.size()) {
    const std::size_t chunk_size = rd_u32(bytes, off + 4);
    const std::size_t body = off + 8;
    if (body + chunk_size > bytes.size())
      throw wav_parse_error("chunk overruns file", off + 4);
    if (tag_is(bytes, off, "fmt ")) {
      if (chunk_size < 16) throw wav_parse_error("fmt chunk too small", off + 4);
      const std::uint16_t format = rd_u16(bytes, body);
      if (format != 1)
        throw unsupported_error("unsupported format code " + std::to_string(format) +
                                " (PCM only)");
      channels = rd_u16(bytes, body + 2);
      if (channels != 1 && channels != 2)
        throw unsupported_error("unsupported channel count " + std::to_string(channels));
      rate = rd_u32(bytes, body + 4);
      if (rate == 0) throw wav_parse_error("zero sample rate", body + 4);
      block_align = rd_u16(bytes, body + 12);
      bits = rd_u16(bytes, body + 14);
      if (bits != 16)
        throw unsupported_error("unsupported bit depth " + std::to_string(bits) +
                                " (16-bit only)");
      have_fmt = true;
    } else if (tag_is(bytes, off, "data")) {
      data = bytes.data() + body;
      data_len = chunk_size;
      data_off = body;
    }
    off = body + chunk_size + (chunk_size & 1);  // chunks pad to even
  }
  if (off != bytes.size()) throw wav_parse_error("trailing garbage after last chunk", off);
  if (!have_fmt) throw wav_parse_error("no fmt chunk", bytes.size());
  if (!data) throw wav_parse_error("no data chunk", bytes.size());

  const std::size_t frame_bytes = 2u * channels;
  if (block_align != frame_bytes)
    throw wav_parse_error("block align inconsistent with format", data_off);
  if (data_len % frame_bytes != 0)
    throw wav_parse_error("data chunk not a whole number of frames", data_off);
  const std::size_t frames = data_len / frame_bytes;
  if (frames == 0) throw wav_parse_error("empty data chunk", data_off);

  AudioClip clip;
  clip.signal.samples.resize(frames);
  clip.signal.sample_rate = static_cast<double>(rate);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::uint16_t c = 0; c < channels; ++c) {
      const std::size_t p = f * frame_bytes + 2u * c;
      const std::int16_t v =
          static_cast<std::int16_t>(static_cast<std::uint16_t>(data[p] | (data[p + 1] << 8)));
      acc += static_cast<double>(v) / 32768.0;
    }
    clip.signal.samples[f] = acc / channels;
  }
  return clip;
}

std::vector<std::uint8_t> write_wav(const AudioClip& clip) {
  clip.signal.validate();
  if (!clip.signal.sample_rate)
    throw std::invalid_argument("write_wav: clip has no sample rate");
  const std::uint32_t rate = clip.rate();
  const std::size_t n = clip.signal.size();

  std::vector<std::uint8_t> out;
  out.reserve(44 + 2 * n);
  wr_tag(out, "RIFF");
  wr_u32(out, static_cast<std::uint32_t>(36 + 2 * n));
  wr_tag(out, "WAVE");
  wr_tag(out, "fmt ");
  wr_u32(out, 16);
  wr_u16(out, 1);          // PCM
  wr_u16(out, 1);          // mono
  wr_u32(out, rate);
  wr_u32(out, rate * 2);   // byte rate
  wr_u16(out, 2);          // block align
  wr_u16(out, 16);         // bits
  wr_tag(out, "data");
  wr_u32(out, static_cast<std::uint32_t>(2 * n));
  for (double s : clip.signal.samples) {
    long q = std::lround(s * 32767.0);
    if (q > 32767) q = 32767;
    if (q < -32768) q = -32768;
    wr_u16(out, static_cast<std::uint16_t>(static_cast<std::int16_t>(q)));
  }
  return out;
}

Signal denoise_overlap_add(const Signal& y, const DenoiseParams& params,
                           std::size_t window) {
  y.validate();
  params.validate();
  if (window < 4 || window % 2 != 0)
    throw std::invalid_argument("denoise_overlap_add: window must be even and >= 4");
  const std::size_t n = y.size();
  if (n <= window) return denoise_clip(y, params).x;

  const std::size_t hop = window / 2;
  std::vector<double> hann(window);
  for (std::size_t i = 0; i < window; ++i)
    hann[i] = 0.5 * (1.0 - std::cos(2.0 * M_PI * static_cast<double>(i) /
                                    static_cast<double>(window)));

  std::vector<double> acc(n, 0.0), wsum(n, 0.0);
  for (std::size_t t = 0;; t += hop) {
    const std::size_t len = std::min(window, n - t);
    Signal seg;
    seg.samples.assign(y.samples.begin() + static_cast<std::ptrdiff_t>(t),
                       y.samples.begin() + static_cast<std::ptrdiff_t>(t + len));
    const Signal xs = denoise_clip(seg, params).x;
    const bool last = t + len >= n;
    for (std::size_t i = 0; i < len; ++i) {
      double w = hann[i];
      if (t == 0 && i < hop) w = 1.0;        // nothing overlaps the head
      if (last && i >= hop) w = 1.0;         // nothing overlaps the tail
      acc[t + i] += w * xs[i];
      wsum[t + i] += w;
    }
    if (last) break;
  }
  Signal out = y;
  for (std::size_t i = 0; i < n; ++i) out.samples[i] = acc[i] / wsum[i];
  return out;
}

}  // namespace tvd
