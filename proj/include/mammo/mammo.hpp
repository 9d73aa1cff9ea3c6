#pragma once

#include "architecture.hpp"
#include "arithmetic_coder.hpp"
#include "bitpack.hpp"
#include "byte_io.hpp"
#include "container.hpp"
#include "error.hpp"
#include "image_io.hpp"
#include "layers.hpp"
#include "metrics.hpp"
#include "model.hpp"
#include "patches.hpp"
#include "quantizer.hpp"
#include "tensor.hpp"
#include "weights.hpp"
