#pragma once

// Core library (no file I/O). Include colormosaic/image_io.hpp for raster
// loading and saving, which pulls in OpenCV.

#include "colormosaic/colorspace.hpp"
#include "colormosaic/error.hpp"
#include "colormosaic/fft.hpp"
#include "colormosaic/image.hpp"
#include "colormosaic/matrix.hpp"
#include "colormosaic/metrics.hpp"
#include "colormosaic/mosaic.hpp"
#include "colormosaic/pipeline.hpp"
#include "colormosaic/spatial.hpp"
#include "colormosaic/spectral.hpp"
