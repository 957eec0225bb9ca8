#include <doctest.h>

#include <string>

#include "jamsec/config_io.hpp"

using namespace jamsec;

TEST_CASE("parse a config file") {
  const RunConfig c = parse_config(R"(
# defaults, sensing on
version = 1
P_A = 20          # Alice power
lambda_A = 0.3
alpha_A = 0.75
sensing = on
tau = 5e-4
)");
  CHECK(c.system.alice_power == 20.0);
  CHECK(c.system.arrival_prob == 0.3);
  REQUIRE(c.system.access_prob);
  CHECK(*c.system.access_prob == 0.75);
  CHECK(c.policy.sensing_enabled);
  CHECK(c.policy.sensing_time == 5e-4);
  CHECK(c.system.jam_power == SystemConfig{}.jam_power);
}

TEST_CASE("alpha_A auto and booleans") {
  RunConfig c;
  apply_setting(c, "alpha_A", "0.2");
  apply_setting(c, "alpha_A", "auto");
  CHECK_FALSE(c.system.access_prob);
  for (const char* t : {"true", "1", "on"}) {
    apply_setting(c, "sensing", t);
    CHECK(c.policy.sensing_enabled);
  }
  for (const char* f : {"false", "0", "off"}) {
    apply_setting(c, "sensing", f);
    CHECK_FALSE(c.policy.sensing_enabled);
  }
}

TEST_CASE("config errors name the location") {
  auto message = [](const std::string& text) {
    try {
      parse_config(text, "x.cfg");
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message("P_A = 1\nfoo = 2\n").find("x.cfg:2") != std::string::npos);
  CHECK(message("P_A = ten\n").find("P_A") != std::string::npos);
  CHECK(message("P_A 10\n").find("expected key = value") != std::string::npos);
  CHECK(message("version = 2\n").find("version") != std::string::npos);
  CHECK(message("sensing = maybe\n").find("sensing") != std::string::npos);
  CHECK(message("P_A = 1 2\n").find("P_A") != std::string::npos);
}

TEST_CASE("missing file") {
  try {
    load_config("/definitely/not/here.cfg");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("/definitely/not/here.cfg") != std::string::npos);
  }
}

TEST_CASE("format and parse round trip") {
  RunConfig c;
  c.system.alice_power = 12.345678901234;
  c.system.access_prob = 0.123456789;
  c.system.var_eb = 3.0;
  c.policy.jam_prob = 0.7;
  c.policy.sensing_enabled = true;
  c.policy.false_alarm_prob = 0.05;
  const RunConfig back = parse_config(format_config(c));
  CHECK(back.system.alice_power == c.system.alice_power);
  CHECK(*back.system.access_prob == *c.system.access_prob);
  CHECK(back.system.var_eb == 3.0);
  CHECK(back.policy.jam_prob == 0.7);
  CHECK(back.policy.sensing_enabled);
  CHECK(back.policy.false_alarm_prob == 0.05);
  CHECK(format_config(back) == format_config(c));
}

TEST_CASE("report json carries every field") {
  SystemConfig c;
  AttackerPolicy p;
  p.sensing_enabled = true;
  const auto j = to_json(run(c, p, 1, 2000));
  for (const char* key : {"n_slots", "burn_in_slots", "measured_slots", "seed", "alpha_A",
                          "mu_A_hat", "throughput_hat", "mu_sec_hat", "eh_rate",
                          "depletion_rate", "state_probs", "queue", "battery", "initial_queue",
                          "arrivals", "departures", "eve_actions", "sensing"}) {
    CHECK_MESSAGE(j.contains(key), key);
  }
  CHECK(j["mu_sec_hat"].contains("se"));
  CHECK(j["mu_sec_hat"].contains("ci"));
}

TEST_CASE("starved-secrecy names") {
  CHECK(parse_starved_secrecy(to_string(StarvedSecrecy::AsWritten)) == StarvedSecrecy::AsWritten);
  CHECK(parse_starved_secrecy(to_string(StarvedSecrecy::LinkBased)) == StarvedSecrecy::LinkBased);
  CHECK_THROWS_AS(parse_starved_secrecy("sometimes"), ConfigError);
}
