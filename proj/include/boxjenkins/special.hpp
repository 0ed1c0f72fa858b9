#pragma once

namespace bj {

/// Regularized lower incomplete gamma P(s, x), s > 0, x >= 0.
/// Series expansion below x = s + 1, Lentz continued fraction above.
[[nodiscard]] double gamma_p(double s, double x);

/// Upper tail Q(s, x) = 1 - P(s, x), computed without cancellation.
[[nodiscard]] double gamma_q(double s, double x);

[[nodiscard]] double chi_square_cdf(double x, double dof);

/// 1 - chi_square_cdf, accurate in the far tail.
[[nodiscard]] double chi_square_sf(double x, double dof);

[[nodiscard]] double normal_cdf(double x);

/// Inverse standard normal CDF: Acklam's rational approximation followed by
/// one Halley step against the erfc-based CDF. Throws InvalidArgument unless
/// 0 < prob < 1.
[[nodiscard]] double normal_quantile(double prob);

}  // namespace bj
