#pragma once

#include "entropchain/block.hpp"
#include "entropchain/chainstore.hpp"
#include "entropchain/common.hpp"
#include "entropchain/crypto.hpp"
#include "entropchain/encoding.hpp"
#include "entropchain/entropy.hpp"
#include "entropchain/evalharness.hpp"
#include "entropchain/image.hpp"
#include "entropchain/image_io.hpp"
#include "entropchain/mining.hpp"
