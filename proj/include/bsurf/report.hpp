#pragma once

#include "bsurf/documents.hpp"
#include "bsurf/topo.hpp"

namespace bsurf {

// JSON reports behind the command line tool. Every numeric quantity is an exact
// string ("p/q" for rationals); ids and counts are plain numbers.

Json validate_report(const BranchedSurface& b);
Json vertices_report(const BranchedSurface& b);
Json fundamentals_report(const BranchedSurface& b, long long max_coord);
Json decompose_report(const BranchedSurface& b, const Weights& w, long long max_coord, bool* found = nullptr);
Json qh_payload(const BranchedSurface& b);
Json iso_payload(const BranchedSurface& b);
Json iso_check_report(const BranchedSurface& b, const DiscInstance& a, const IsoCertificate& cert, bool* pass = nullptr);
Json gauss_bonnet_report(const BranchedSurface& b, const DiscInstance& a, bool* zero = nullptr);
Json growth_payload(const BranchedSurface& b);
Json growth_sample_report(const BranchedSurface& b, const Weights& w, long long radius, long long base);
Json holonomy_report(const BranchedSurface& b, const Weights& w, const std::vector<LoopCrossing>& loop);
Json cover_report(const OrientationCover& oc);
Json hb_report(const HorizontalBoundary& hb);
Json large_report(const LargeReport& r);
Json split_move_json(const SplitMove& mv);
Json split_payload(const BranchedSurface& b, const Weights& w, std::optional<int> edge, int budget, BranchedSurface* result = nullptr);
Json genus_payload(const BranchedSurface& b, long long max_coord, std::optional<Integer> k, std::optional<CeilingParams> params);
Json matrix_json(const std::vector<std::vector<long long>>& m);

} // namespace bsurf
