"""Shared vocabulary for the corpus builder scripts.

Temporal surfaces are grouped by type; each entry is
``(surface, rule_id, preposition)`` where ``rule_id`` names the grammar
rule expected to win on that surface in a neutral context, and the
preposition is what a template should put in front of the surface
("on ", "in ", "at ", or "").  Keeping these here lets the golden-corpus
builder and the sample-corpus builder draw from one pool.

Neutral template vocabulary must not contain grammar trigger tokens
(digits, month/weekday names, time units, day-parts, frequency adverbs,
number words, deictic day words); the builders rely on that to reason
about expected spans without running the tagger.
"""

DATE_SURFACES = [
    ("January 12, 2004", "date_month_day_year", "on "),
    ("Jan. 5, 1901", "date_month_day_year", "on "),
    ("February 29, 2016", "date_month_day_year", "on "),
    ("5 June 2004", "date_day_month_year", "on "),
    ("23rd of April 1791", "date_day_month_year", "on "),
    ("March 3rd", "date_month_day", "on "),
    ("December 25", "date_month_day", "on "),
    ("15 March", "date_day_month", "on "),
    ("1st of September", "date_day_month", "on "),
    ("June 2004", "date_month_year", "in "),
    ("October 1917", "date_month_year", "in "),
    ("2020-12-01", "date_iso", "on "),
    ("1999/03/08", "date_iso", "on "),
    ("1985", "date_year", "in "),
    ("2041", "date_year", "in "),
    ("Monday", "date_weekday", "on "),
    ("Saturday", "date_weekday", "on "),
    ("today", "date_deictic_day", ""),
    ("tomorrow", "date_deictic_day", ""),
    ("yesterday", "date_deictic_day", ""),
]

TIME_SURFACES = [
    ("15:30", "time_clock", "at "),
    ("09:05", "time_clock", "at "),
    ("23:59:59", "time_clock", "at "),
    ("3:45 pm", "time_clock", "at "),
    ("11:05 a.m.", "time_clock", "at "),
    ("9 am", "time_clock_ampm", "at "),
    ("7 p.m.", "time_clock_ampm", "at "),
    ("next Monday", "time_deictic", ""),
    ("last week", "time_deictic", ""),
    ("this morning", "time_deictic", ""),
    ("next weekend", "time_deictic", ""),
    ("last night", "time_deictic", ""),
    ("noon", "time_daypart", "at "),
    ("midnight", "time_daypart", "at "),
    ("tonight", "time_daypart", ""),
]

DURATION_SURFACES = [
    ("3 days", "dur_cardinal_unit", ""),
    ("two weeks", "dur_cardinal_unit", ""),
    ("14 minutes", "dur_cardinal_unit", ""),
    ("twenty-five minutes", "dur_cardinal_unit", ""),
    ("seven years", "dur_cardinal_unit", ""),
    ("1.5 hours", "dur_cardinal_unit", ""),
    ("half an hour", "dur_half_unit", ""),
    ("half a century", "dur_half_unit", ""),
    ("an hour", "dur_article_unit", ""),
    ("a minute", "dur_article_unit", ""),
]

SET_SURFACES = [
    ("every 4 years", "set_every", ""),
    ("every Monday", "set_every", ""),
    ("every other week", "set_every", ""),
    ("each month", "set_every", ""),
    ("every morning", "set_every", ""),
    ("twice a week", "set_times_per", ""),
    ("three times a day", "set_times_per", ""),
    ("once per hour", "set_times_per", ""),
    ("daily", "set_freq_adverb", ""),
    ("annually", "set_freq_adverb", ""),
]

SURFACES_BY_TYPE = {
    "date": DATE_SURFACES,
    "time": TIME_SURFACES,
    "duration": DURATION_SURFACES,
    "set": SET_SURFACES,
}

GIVEN_NAMES = [
    "Amara", "Bruno", "Carmen", "Diego", "Elif", "Farid", "Greta", "Hiro",
    "Ingrid", "Jonas", "Kavya", "Lorenzo", "Mireille", "Nadia", "Oskar",
    "Priya", "Quentin", "Rosa", "Stefan", "Tomoko", "Ulrich", "Valentina",
    "Wei", "Ximena", "Yusuf", "Zofia", "Anders", "Beatriz", "Callum",
    "Dalia", "Emeka", "Fatima", "Gustav", "Helena", "Ivo", "Jasmin",
]

FAMILY_NAMES = [
    "Abe", "Bergstrom", "Castellanos", "Dupont", "Eriksen", "Fontaine",
    "Galvez", "Hoffmann", "Ishikawa", "Jankovic", "Kowalski", "Lindqvist",
    "Moreau", "Novak", "Okafor", "Petrov", "Quiroga", "Rasmussen",
    "Soriano", "Takahashi", "Ueda", "Vasquez", "Weiss", "Xiang",
    "Yamamoto", "Zelenka", "Aldana", "Brandt", "Cervantes", "Dvorak",
]

PLACES = [
    "Lisbon", "Kyoto", "Valparaiso", "Gdansk", "Marseille", "Tbilisi",
    "Cusco", "Bergen", "Zanzibar", "Isfahan", "Oaxaca", "Tallinn",
    "Sarajevo", "Hanoi", "Montevideo", "Rotterdam", "Lahore", "Porto",
    "Vilnius", "Cartagena", "Weimar", "Ostrava", "Ljubljana", "Fremantle",
]

ORG_STEMS = [
    "Meridian", "Vantage", "Cobalt", "Aurora", "Halcyon", "Pinnacle",
    "Redwood", "Sable", "Granite", "Lumen", "Atlas", "Borealis",
    "Crescent", "Vermilion", "Trellis", "Quarry", "Solstice", "Harbor",
]

ORG_KINDS = [
    "Institute", "Observatory", "Foundation", "Conservatory", "Archive",
    "Laboratory", "Society", "Collective", "Consortium", "Atelier",
]
