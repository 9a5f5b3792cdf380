#!/usr/bin/env python3
"""Regenerates the synthetic fixtures under fixtures/.

The corpus is small but structured: activity diaries with plausible
sleep/work/evening rhythms, a census whose household size grows with income
bracket, and sinusoidal weather at hourly resolution. Everything is seeded,
so reruns are byte-identical.
"""

import math
import random
from pathlib import Path

AWAY, SLEEP, GROOM, COOK, DISH, CLEAN, LAUNDRY, LEISURE, OTHER = range(9)

AGE_BINS = ["15-24", "25-44", "45-64", "65+"]
OCCUPATIONS = ["office", "service", "manual", "other"]
BRACKETS = ["<25K", "25-50K", "50-75K", "75-100K", "100K+"]

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def day_schedule(rng, employed, weekday):
    slots = [LEISURE] * 144
    wake = int(rng.gauss(42, 4))
    wake = max(36, min(54, wake))
    bed = int(rng.gauss(136, 3))
    bed = max(126, min(143, bed))
    for s in range(wake):
        slots[s] = SLEEP
    for s in range(bed, 144):
        slots[s] = SLEEP

    work = employed and weekday
    if work:
        leave = min(wake + rng.randint(3, 6), 60)
        back = rng.randint(98, 106)  # 16:20 .. 17:40
        for s in range(leave, back):
            slots[s] = AWAY
        evening_start = back
    else:
        evening_start = wake
        if rng.random() < 0.5:  # errand
            start = rng.randint(wake + 6, 100)
            for s in range(start, min(start + rng.randint(3, 8), 144)):
                slots[s] = AWAY
        evening_start = wake

    # morning routine
    slots[wake] = GROOM
    if wake + 1 < 144 and slots[wake + 1] == LEISURE:
        slots[wake + 1] = COOK

    # dinner block around 18:00-19:00
    dinner = rng.randint(106, 112)
    for s in range(dinner, min(dinner + rng.randint(1, 2), 144)):
        if slots[s] == LEISURE:
            slots[s] = COOK
    after = dinner + 2
    if after < 144 and slots[after] == LEISURE and rng.random() < 0.7:
        slots[after] = DISH

    # occasional chores in free time
    free = [s for s in range(evening_start, bed) if slots[s] == LEISURE]
    rng.shuffle(free)
    chores = []
    if rng.random() < 0.4:
        chores.append(CLEAN)
    if rng.random() < 0.3:
        chores.append(LAUNDRY)
    if rng.random() < 0.5:
        chores.append(OTHER)
    for chore, s in zip(chores, free):
        slots[s] = chore

    # grooming before bed
    if rng.random() < 0.6 and slots[bed - 1] == LEISURE:
        slots[bed - 1] = GROOM
    return slots


def write_activity_logs(rng):
    header = [
        "respondent_id", "age_bin", "employment_status", "occupation_category",
        "parental_status", "day_type",
    ] + [f"s{i:03d}" for i in range(144)]
    rows = [",".join(header)]
    for r in range(60):
        age = rng.choice(AGE_BINS)
        employed = rng.random() < (0.75 if age in ("25-44", "45-64") else 0.35)
        occupation = rng.choice(OCCUPATIONS) if employed else "none"
        parental = "parent" if rng.random() < 0.4 else "non-parent"
        for day_type in ("weekday", "weekend"):
            slots = day_schedule(rng, employed, day_type == "weekday")
            row = [
                f"r{r:03d}", age, "employed" if employed else "not-employed",
                occupation, parental, day_type,
            ] + [str(s) for s in slots]
            rows.append(",".join(row))
    (FIXTURES / "activity_logs.csv").write_text("\n".join(rows) + "\n")


def write_single_respondent():
    header = [
        "respondent_id", "age_bin", "employment_status", "occupation_category",
        "parental_status", "day_type",
    ] + [f"s{i:03d}" for i in range(144)]
    row = ["r-solo", "25-44", "employed", "office", "non-parent", "weekday"] + ["1"] * 144
    text = ",".join(header) + "\n" + ",".join(row) + "\n"
    (FIXTURES / "activity_single.csv").write_text(text)


def household_members(rng, size, bracket_index):
    members = []
    for i in range(size):
        if i < 2:
            age = rng.choice(["25-44", "45-64"])
            employed = rng.random() < 0.5 + 0.1 * bracket_index
            occupation = rng.choice(OCCUPATIONS) if employed else "none"
            parental = "parent" if size >= 3 else "non-parent"
        else:
            age = "15-24"
            employed = False
            occupation = "none"
            parental = "non-parent"
        members.append((age, "employed" if employed else "not-employed", occupation, parental))
    return members


def write_census(rng):
    rows = ["record_id,region,income_bracket,weight,age_bin,employment_status,"
            "occupation_category,parental_status"]
    record = 0
    # Texas: household size tracks the bracket (1 member in <25K up to 5 in 100K+).
    for i in range(40):
        bracket_index = i % 5
        size = bracket_index + 1
        rid = f"tx{record:04d}"
        record += 1
        for member in household_members(rng, size, bracket_index):
            rows.append(f"{rid},TX,{BRACKETS[bracket_index]},1," + ",".join(member))
    # California: sizes decoupled from bracket.
    for i in range(30):
        bracket_index = (i * 3) % 5
        size = (i * 7) % 5 + 1
        rid = f"ca{record:04d}"
        record += 1
        for member in household_members(rng, size, bracket_index):
            rows.append(f"{rid},CA,{BRACKETS[bracket_index]},1," + ",".join(member))
    (FIXTURES / "census.csv").write_text("\n".join(rows) + "\n")


def write_weather():
    # Ten July days, hourly: hot afternoons, warm nights, daylight 06-20.
    rows = ["timestamp,temperature_c,irradiance_wm2"]
    for day in range(10):
        for hour in range(24):
            temp = 30.0 + 6.0 * math.sin(2 * math.pi * (hour - 9) / 24)
            sun = 950.0 * math.sin(math.pi * (hour - 6) / 14) if 6 <= hour <= 20 else 0.0
            rows.append(f"2019-07-{day + 1:02d}T{hour:02d}:00,{temp:.2f},{max(sun, 0):.1f}")
    rows.append("2019-07-11T00:00,24.00,0.0")
    (FIXTURES / "weather.csv").write_text("\n".join(rows) + "\n")


def write_weather_year():
    rows = ["timestamp,temperature_c,irradiance_wm2"]
    from datetime import datetime, timedelta
    t0 = datetime(2019, 1, 1)
    for hour_index in range(367 * 24):
        t = t0 + timedelta(hours=hour_index)
        doy = t.timetuple().tm_yday
        seasonal = 18.0 + 14.0 * math.sin(2 * math.pi * (doy - 105) / 365)
        diurnal = 7.0 * math.sin(2 * math.pi * (t.hour - 9) / 24)
        daylight = math.sin(math.pi * (t.hour - 6) / 14) if 6 <= t.hour <= 20 else 0.0
        season_sun = 0.65 + 0.35 * math.sin(2 * math.pi * (doy - 80) / 365)
        sun = max(950.0 * daylight * season_sun, 0.0)
        rows.append(f"{t:%Y-%m-%dT%H:%M},{seasonal + diurnal:.2f},{sun:.1f}")
    (FIXTURES / "weather_year.csv").write_text("\n".join(rows) + "\n")


def write_scenario():
    text = """{
  "inputs": {
    "activity_log_csv": "activity_logs.csv",
    "census_csv": "census.csv",
    "weather_csv": "weather.csv"
  },
  "scenario": {
    "region": "TX",
    "n_households": 10,
    "start_date": "2019-07-01",
    "days": 7,
    "seed": 42
  }
}
"""
    (FIXTURES / "scenario.json").write_text(text)


def main():
    FIXTURES.mkdir(exist_ok=True)
    rng = random.Random(20190401)
    write_activity_logs(rng)
    write_single_respondent()
    write_census(rng)
    write_weather()
    write_weather_year()
    write_scenario()
    print(f"fixtures written to {FIXTURES}")


if __name__ == "__main__":
    main()
