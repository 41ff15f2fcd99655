#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dhtgb/signal.hpp"

namespace dhtgb {

enum class Waveform { sine, ramp, square, triangle };

/// Only affects ramp and triangle.
///
/// bipolar: ramp spans [-A, A]; triangle is a zero-mean triangle wave in phase
/// with the sine (0 at n = 0, +A a quarter period later).
/// unipolar: ramp spans [0, A]; triangle is a single zero-ended peak of height
/// A at the centre.
enum class Polarity { bipolar, unipolar };

struct WaveformSpec {
  Waveform kind = Waveform::sine;
  Index width = 90;
  double amplitude = 1.0;
  /// Cycles over the width; used by sine, square and bipolar triangle.
  int periods = 1;
  Polarity polarity = Polarity::bipolar;
};

/// Throws InvalidInput describing the first violated constraint.
void validate(const WaveformSpec& spec);

/// Samples n = 0 .. N-1 of the described waveform, origin 0.
Signal generate(const WaveformSpec& spec);

std::string_view to_string(Waveform kind);
std::string_view to_string(Polarity polarity);
std::optional<Waveform> parse_waveform(std::string_view name);
std::optional<Polarity> parse_polarity(std::string_view name);

}  // namespace dhtgb
