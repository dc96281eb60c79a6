#include "bev/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bev {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Config Config::parse(const std::string& text) {
  Config cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::runtime_error("config: line " + std::to_string(lineno) +
                               " is not 'key = value': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::runtime_error("config: empty key on line " + std::to_string(lineno));
    }
    cfg.values_[key] = value;
  }
  return cfg;
}

void Config::set(const std::string& key, const std::string& value) { values_[key] = value; }

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw std::runtime_error("config: key '" + key + "' is not a number: " + it->second);
  }
}

int Config::get_int(const std::string& key, int fallback) const {
  return static_cast<int>(get_int64(key, fallback));
}

std::int64_t Config::get_int64(const std::string& key, std::int64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return std::stoll(it->second);
  } catch (const std::exception&) {
    throw std::runtime_error("config: key '" + key + "' is not an integer: " + it->second);
  }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::runtime_error("config: key '" + key + "' is not a boolean: " + v);
}

std::optional<std::string> Config::first_unknown_key(
    const std::vector<std::string>& known) const {
  for (const auto& [key, value] : values_) {
    if (std::find(known.begin(), known.end(), key) == known.end()) return key;
  }
  return std::nullopt;
}

const std::vector<std::string>& known_config_keys() {
  static const std::vector<std::string> keys = {
      // dataset locations and composition
      "data.train_dir", "data.eval_dir", "data.use_unlabeled",
      // synthetic world and camera rig
      "world.image_w", "world.image_h", "world.fx", "world.fy", "world.cx", "world.cy",
      "world.cam_height", "world.n_cars_min", "world.n_cars_max", "world.n_peds_min",
      "world.n_peds_max", "world.n_walkways_min", "world.n_walkways_max",
      "world.occlusion_height", "world.attenuation",
      // BEV grid geometry
      "bev.classes", "bev.z_cells", "bev.x_cells", "bev.cell_size", "bev.z_min",
      // network widths
      "model.enc1_channels", "model.enc2_channels", "model.feat_channels",
      "model.dec_channels", "model.n_depth",
      // training loop
      "trainer.epochs", "trainer.batch_size", "trainer.lr_initial", "trainer.lr_final",
      "trainer.lr_decay_epoch", "trainer.lambda1", "trainer.lambda2", "trainer.ema_decay",
      "trainer.seed", "trainer.eval_every", "trainer.out_dir", "trainer.threshold",
      // augmentation policy
      "augment.alpha_max_deg", "augment.apply_prob", "augment.border",
  };
  return keys;
}

}  // namespace bev
