#pragma once

namespace diffest {

// Standard normal density, cdf and quantile. The quantile is a rational
// approximation polished with one Newton step against the erfc-based cdf,
// so the pair is mutually inverse well below 1e-9 over [-6, 6]. Version-
// pinned: the seeded normal sampler draws through normal_quantile, so any
// change here is a generator change (bump kGeneratorVersion).

double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double p);

}  // namespace diffest
