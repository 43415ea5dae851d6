#ifndef TVCLIP_AUDIO_IO_HPP
#define TVCLIP_AUDIO_IO_HPP

#include <cstdint>

#include "tv_clip.hpp"

namespace tvd {

// Malformed container; `offset` is the byte position of the problem.
class wav_parse_error : public std::runtime_error {
 public:
  wav_parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct AudioClip {
  Signal signal;              // normalized amplitudes in [-1, 1], rate set
  int source_bit_depth = 16;  // 16 only

  std::uint32_t rate() const {
    return static_cast<std::uint32_t>(*signal.sample_rate);
  }
};

// Parses RIFF/WAVE, PCM format 1, 16-bit, 1 or 2 channels. 16-bit values map
// to [-1, 1] by division by 32768; stereo mixes down by per-sample average.
// Throws wav_parse_error for malformed containers, unsupported_error for
// format code / bit depth / channel counts outside that subset.
AudioClip read_wav(const std::vector<std::uint8_t>& bytes);

// Canonical 44-byte header + mono 16-bit PCM data. Samples quantize by
// round-to-nearest of sample*32767, clamped to [-32768, 32767].
std::vector<std::uint8_t> write_wav(const AudioClip& clip);

// Whole-signal denoising is the default for audio; this variant bounds memory
// for long clips by processing Hann-weighted windows at 50% overlap-add.
Signal denoise_overlap_add(const Signal& y, const DenoiseParams& params,
                           std::size_t window);

}  // namespace tvd

#endif  // TVCLIP_AUDIO_IO_HPP
