#pragma once

// Umbrella header.

#include "sbdsal/bayes.hpp"
#include "sbdsal/color.hpp"
#include "sbdsal/config.hpp"
#include "sbdsal/dataset.hpp"
#include "sbdsal/features.hpp"
#include "sbdsal/geodesic.hpp"
#include "sbdsal/image.hpp"
#include "sbdsal/image_io.hpp"
#include "sbdsal/linalg.hpp"
#include "sbdsal/metrics.hpp"
#include "sbdsal/pipeline.hpp"
#include "sbdsal/refine.hpp"
#include "sbdsal/saliency_map.hpp"
#include "sbdsal/sbd.hpp"
#include "sbdsal/superpixels.hpp"
