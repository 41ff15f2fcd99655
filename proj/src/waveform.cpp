#include "dhtgb/waveform.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "dhtgb/errors.hpp"

namespace dhtgb {

namespace {

// Position within the current cycle as the integer r in [0, N), so that the
// phase is exactly r / N.
Index cycle_position(Index n, const WaveformSpec& spec) {
  return (n * spec.periods) % spec.width;
}

double sine_sample(Index n, const WaveformSpec& spec) {
  const double phase = static_cast<double>(cycle_position(n, spec)) /
                       static_cast<double>(spec.width);
  return spec.amplitude * std::sin(2.0 * std::numbers::pi * phase);
}

double square_sample(Index n, const WaveformSpec& spec) {
  return 2 * cycle_position(n, spec) < spec.width ? spec.amplitude
                                                  : -spec.amplitude;
}

double ramp_sample(Index n, const WaveformSpec& spec) {
  const double span = static_cast<double>(spec.width - 1);
  if (spec.polarity == Polarity::unipolar) {
    return spec.amplitude * static_cast<double>(n) / span;
  }
  // Written as (2n - (N-1)) / (N-1) so that f(n) = -f(N-1-n) exactly.
  return spec.amplitude * static_cast<double>(2 * n - (spec.width - 1)) / span;
}

double triangle_sample(Index n, const WaveformSpec& spec) {
  if (spec.polarity == Polarity::unipolar) {
    const double span = static_cast<double>(spec.width - 1);
    return spec.amplitude *
           (1.0 - std::abs(2.0 * static_cast<double>(n) / span - 1.0));
  }
  const Index four_r = 4 * cycle_position(n, spec);
  const double x = static_cast<double>(four_r) / static_cast<double>(spec.width);
  if (four_r < spec.width) return spec.amplitude * x;
  if (four_r < 3 * spec.width) return spec.amplitude * (2.0 - x);
  return spec.amplitude * (x - 4.0);
}

}  // namespace

void validate(const WaveformSpec& spec) {
  if (spec.width < 2) throw InvalidInput("waveform width must be at least 2");
  if (!(spec.amplitude > 0.0) || !std::isfinite(spec.amplitude)) {
    throw InvalidInput("waveform amplitude must be positive and finite");
  }
  if (spec.periods < 1) throw InvalidInput("waveform periods must be at least 1");
  const bool needs_half_cycles =
      spec.kind == Waveform::square ||
      (spec.kind == Waveform::triangle && spec.polarity == Polarity::bipolar);
  if (needs_half_cycles && 2 * static_cast<Index>(spec.periods) > spec.width) {
    throw InvalidInput("periods must not exceed width / 2 for " +
                       std::string(to_string(spec.kind)));
  }
}

Signal generate(const WaveformSpec& spec) {
  validate(spec);
  Vector<double> samples(spec.width);
  for (Index n = 0; n < spec.width; ++n) {
    switch (spec.kind) {
      case Waveform::sine: samples[n] = sine_sample(n, spec); break;
      case Waveform::ramp: samples[n] = ramp_sample(n, spec); break;
      case Waveform::square: samples[n] = square_sample(n, spec); break;
      case Waveform::triangle: samples[n] = triangle_sample(n, spec); break;
    }
  }
  return Signal(0, std::move(samples));
}

std::string_view to_string(Waveform kind) {
  switch (kind) {
    case Waveform::sine: return "sine";
    case Waveform::ramp: return "ramp";
    case Waveform::square: return "square";
    case Waveform::triangle: return "triangle";
  }
  return "unknown";
}

std::string_view to_string(Polarity polarity) {
  return polarity == Polarity::bipolar ? "bipolar" : "unipolar";
}

std::optional<Waveform> parse_waveform(std::string_view name) {
  for (auto kind : {Waveform::sine, Waveform::ramp, Waveform::square,
                    Waveform::triangle}) {
    if (name == to_string(kind)) return kind;
  }
  return std::nullopt;
}

std::optional<Polarity> parse_polarity(std::string_view name) {
  if (name == "bipolar") return Polarity::bipolar;
  if (name == "unipolar") return Polarity::unipolar;
  return std::nullopt;
}

}  // namespace dhtgb
