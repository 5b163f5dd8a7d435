#!/usr/bin/env python3
"""Regenerate the mini knowledge-graph fixture under fixtures/.

Deterministic: a fixed seed drives every random choice, so reruns are
byte-identical. The graph carries a hand-written founders cluster (John
Adams and his circle, with the dates the tests pin) plus seeded synthetic
families. The two corpus flavors emphasize different property families so
the two trained models disagree on at least one relation.

After writing, the script replays the full pipeline and asserts the
properties the test suite relies on.
"""

from __future__ import annotations

import argparse
import random
from pathlib import Path

SEED = 20260809

MALE_NAMES = [
    "Nathaniel", "Ezekiel", "Thaddeus", "Gideon", "Barnabas", "Rufus", "Silas",
    "Jonas", "Amos", "Ezra", "Caleb", "Elias", "Phineas", "Obadiah", "Josiah",
    "Ambrose", "Cornelius", "Augustus", "Theodore", "Horace",
]
FEMALE_NAMES = [
    "Mercy", "Prudence", "Tabitha", "Dorothea", "Lavinia", "Clarissa", "Matilda",
    "Henrietta", "Rosalind", "Eugenia", "Temperance", "Philippa", "Cordelia",
    "Wilhelmina", "Arabella", "Constance", "Beatrix", "Euphemia", "Honora", "Seraphina",
]
SURNAMES = [
    "Holloway", "Whitcomb", "Ashford", "Pemberton", "Caldwell", "Fairbanks",
    "Grimshaw", "Latimer", "Ormsby", "Pickering", "Quimby", "Ravenswood",
    "Stanhope", "Tilbury", "Underhill", "Vickery", "Wadsworth", "Yardley",
    "Bexley", "Cartwright", "Dunmore", "Ellsworth",
]
TAG_POOL = [
    "politician", "lawyer", "diplomat", "writer", "scientist", "philosopher",
    "merchant", "soldier", "clergyman", "physician",
]

COLLEGES = ["HarvardCollege", "WilliamAndMary", "YaleCollege"]
SOCIETIES = ["RoyalSociety", "AmericanAcademy", "PhilosophicalSociety", "MassHistSociety"]
OFFICES = [
    "GovernorMass", "SenatorUS", "MayorBoston", "JudgeSuffolk",
    "AmbassadorFrance", "SecretaryState",
]
ESTATES = ["OakhillManor", "BramblewoodHouse", "FernleighHall", "GreystoneCourt"]

WIKI_PROPS = {"born", "died", "marriedTo", "child", "positionHeld", "signatory"}
BIOWEB_PROPS = {"born", "marriedTo", "educatedAt", "awardReceived", "memberOf", "residence"}

NOISE = [
    "Contemporaries described a disciplined daily routine of letters and ledgers.",
    "Much of the private correspondence survives in family archives.",
    "Later historians disagreed sharply about the legacy.",
    "The family kept a modest household despite growing fame.",
    "Neighbors recalled long walks at dawn regardless of weather.",
]

MONTH_NAMES = [
    "January", "February", "March", "April", "May", "June", "July",
    "August", "September", "October", "November", "December",
]


def prose_date(iso: str) -> str:
    y, m, d = iso.split("-")
    return f"{MONTH_NAMES[int(m) - 1]} {int(d)}, {int(y)}"


class Fixture:
    def __init__(self):
        self.rng = random.Random(SEED)
        self.entities: list[dict] = []
        self.events: list[dict] = []
        self.facts: list[tuple] = []
        self.bios: dict[tuple[str, str], list[str]] = {}
        self._ids: set[str] = set()

    # ---- low-level builders -------------------------------------------

    def entity(self, id, label, kind, tags="", birth="", death="", lat="", lon="",
               links=0, desc=""):
        assert id not in self._ids, id
        self._ids.add(id)
        self.entities.append(dict(
            id=id, label=label, kind=kind, tags=tags, birth=birth, death=death,
            lat=lat, lon=lon, links=links, desc=desc,
        ))

    def event(self, id, label, start, end="", lat="", lon="", participants=(), desc=""):
        assert id not in self._ids, id
        self._ids.add(id)
        self.events.append(dict(
            id=id, label=label, start=start, end=end, lat=lat, lon=lon,
            participants="|".join(participants), desc=desc,
        ))

    def fact(self, subject, prop, label, object_kind, obj, vstart="", vend=""):
        self.facts.append((subject, prop, label, object_kind, obj, vstart, vend))

    def sentence(self, person, source, text):
        self.bios.setdefault((person, source), []).append(text)

    def rand_date(self, year, spread=0):
        y = year + (self.rng.randrange(spread + 1) if spread else 0)
        return f"{y:04d}-{self.rng.randrange(1, 13):02d}-{self.rng.randrange(1, 29):02d}"

    # ---- hand-written founders cluster --------------------------------

    def build_core(self):
        self.entity("JohnAdams", "John Adams", "person", "politician|lawyer|diplomat",
                    "1735-10-30", "1826-07-04", links=250,
                    desc="Second president of the United States and a central figure of the American founding era.")
        self.entity("AbigailAdams", "Abigail Adams|Abigail Smith", "person", "writer",
                    "1744-11-22", "1818-10-28", links=90,
                    desc="Writer and adviser, remembered for a formidable correspondence.")
        self.entity("JohnQuincyAdams", "John Quincy Adams", "person", "politician|diplomat",
                    "1767-07-11", "1848-02-23", links=180,
                    desc="Sixth president of the United States and veteran diplomat.")
        self.entity("CharlesAdams", "Charles Adams", "person", "lawyer",
                    "1770-05-29", "1800-11-30", links=15,
                    desc="Lawyer whose short life ended in New York.")
        self.entity("LouisaAdams", "Louisa Adams|Louisa Johnson", "person", "writer",
                    "1775-02-12", "1852-05-15", links=20,
                    desc="Writer and London-born observer of Washington society.")
        self.entity("SamuelAdams", "Samuel Adams", "person", "politician|merchant",
                    "1722-09-27", "1803-10-02", links=120,
                    desc="Boston organizer of the revolutionary cause.")
        self.entity("ThomasJefferson", "Thomas Jefferson", "person", "politician|philosopher",
                    "1743-04-13", "1826-07-04", links=240,
                    desc="Third president of the United States and principal author of the Declaration.")
        self.entity("MarthaJefferson", "Martha Jefferson|Martha Wayles", "person", "",
                    "1748-10-30", "1782-09-06", links=12,
                    desc="Mistress of Monticello in its earliest years.")
        self.entity("BenjaminFranklin", "Benjamin Franklin", "person", "scientist|diplomat",
                    "1706-01-17", "1790-04-17", links=230,
                    desc="Printer, natural philosopher, and elder statesman of the founding.")
        self.entity("JohnLocke", "John Locke", "person", "philosopher|physician",
                    "1632-08-29", "1704-10-28", links=150,
                    desc="English philosopher whose treatises shaped colonial political thought.")

        self.entity("PresidentOfUS", "President of the United States", "other", "",
                    "1789-04-30", "", links=300)
        self.entity("VicePresidentOfUS", "Vice President of the United States", "other", "",
                    "1789-04-21", "", links=150)
        self.entity("GovernorMass", "Governor of Massachusetts", "other", "", "1780-10-25", "",
                    links=70)
        self.entity("SenatorUS", "United States Senator", "other", "", "1789-03-04", "", links=90)
        self.entity("MayorBoston", "Mayor of Boston", "other", "", "1822-02-23", "", links=40)
        self.entity("JudgeSuffolk", "Justice of the Suffolk Court", "other", "", "1760", "",
                    links=25)
        self.entity("AmbassadorFrance", "Ambassador to France", "other", "", "1778-03-23", "",
                    links=60)
        self.entity("SecretaryState", "Secretary of State", "other", "", "1789-07-27", "",
                    links=110)

        self.entity("HarvardCollege", "Harvard College", "other", "", "1636", "",
                    "42.3744", "-71.1182", links=200,
                    desc="The oldest college of the colonies.")
        self.entity("WilliamAndMary", "College of William and Mary", "other", "", "1693-02-08", "",
                    "37.2707", "-76.7075", links=120)
        self.entity("YaleCollege", "Yale College", "other", "", "1701-10-09", "",
                    "41.3163", "-72.9223", links=140)
        self.entity("RoyalSociety", "Royal Society", "other", "", "1660-11-28", "",
                    "51.5074", "-0.1278", links=190)
        self.entity("AmericanAcademy", "American Academy of Arts and Sciences", "other", "",
                    "1780-05-04", "", "42.3751", "-71.1056", links=110)
        self.entity("PhilosophicalSociety", "American Philosophical Society", "other", "",
                    "1743-05-14", "", "39.9489", "-75.1500", links=100)
        self.entity("MassHistSociety", "Massachusetts Historical Society", "other", "",
                    "1791-01-24", "", "42.3467", "-71.0972", links=45)
        self.entity("ContinentalCongress", "Continental Congress", "other", "",
                    "1774-09-05", "1789-03-02", "39.9489", "-75.1500", links=140)

        self.entity("DeclarationOfIndependence", "Declaration of Independence", "other", "",
                    "1776-07-04", "", "39.9489", "-75.1500", links=220)
        self.entity("TreatyOfParis", "Treaty of Paris", "other", "", "1783-09-03", "",
                    "48.8566", "2.3522", links=130)
        self.entity("MassConstitution", "Constitution of Massachusetts", "other", "",
                    "1780-10-25", "", links=55)
        self.entity("TreatyOfGhent", "Treaty of Ghent", "other", "", "1814-12-24", "",
                    "51.0543", "3.7174", links=65)
        self.entity("AmbassadorNL", "Ambassador to the Netherlands", "other", "",
                    "1781-04-19", "", links=35)
        self.entity("UniversityOfVirginia", "University of Virginia", "other", "",
                    "1819-01-25", "", "38.0336", "-78.5080", links=105)
        self.entity("CopleyMedal", "Copley Medal", "other", "", "1731", "", links=80)
        self.entity("MagellanicPremium", "Magellanic Premium", "other", "", "1786", "", links=30)
        self.entity("Peacefield", "Peacefield", "other", "", "1731", "",
                    "42.2553", "-71.0110", links=25)
        self.entity("Monticello", "Monticello", "other", "", "1772", "",
                    "38.0086", "-78.4532", links=95)
        for estate in ESTATES:
            label = estate.replace("Manor", " Manor").replace("House", " House")
            label = label.replace("Hall", " Hall").replace("Court", " Court")
            lat = f"{self.rng.uniform(38.0, 44.0):.4f}"
            lon = f"{self.rng.uniform(-77.0, -70.0):.4f}"
            self.entity(estate, label, "other", "", str(self.rng.randrange(1700, 1760)), "",
                        lat, lon, links=self.rng.randrange(5, 20))

        # John Adams: the worked example the tests pin exactly
        self.fact("JohnAdams", "born", "born", "date", "1735-10-30")
        self.fact("JohnAdams", "died", "died", "date", "1826-07-04")
        self.fact("JohnAdams", "marriedTo", "Married to", "entity", "AbigailAdams",
                  "1764-10-25", "1818-10-28")
        self.fact("JohnAdams", "child", "Child", "entity", "JohnQuincyAdams")
        self.fact("JohnAdams", "child", "Child", "entity", "CharlesAdams")
        self.fact("JohnAdams", "positionHeld", "Position held", "entity", "VicePresidentOfUS",
                  "1789-04-21", "1797-03-04")
        self.fact("JohnAdams", "positionHeld", "Position held", "entity", "PresidentOfUS",
                  "1797-03-04", "1801-03-04")
        self.fact("JohnAdams", "signatory", "Signatory", "entity", "DeclarationOfIndependence",
                  "1776-07-04", "1776-07-04")
        self.fact("JohnAdams", "signatory", "Signatory", "entity", "MassConstitution",
                  "1780-10-25", "1780-10-25")
        self.fact("JohnAdams", "educatedAt", "Educated at", "entity", "HarvardCollege",
                  "1751-08-01", "1755-07-16")
        self.fact("JohnAdams", "memberOf", "Member of", "entity", "AmericanAcademy")
        self.fact("JohnAdams", "residence", "Residence", "entity", "Peacefield",
                  "1788-09-01", "1826-07-04")
        self.fact("JohnAdams", "influencedBy", "Influenced by", "entity", "JohnLocke")

        self.fact("AbigailAdams", "born", "born", "date", "1744-11-22")
        self.fact("AbigailAdams", "died", "died", "date", "1818-10-28")
        self.fact("AbigailAdams", "marriedTo", "Married to", "entity", "JohnAdams",
                  "1764-10-25", "1818-10-28")
        self.fact("AbigailAdams", "child", "Child", "entity", "JohnQuincyAdams")
        self.fact("AbigailAdams", "child", "Child", "entity", "CharlesAdams")
        self.fact("AbigailAdams", "residence", "Residence", "entity", "Peacefield",
                  "1788-09-01", "1818-10-28")

        self.fact("JohnQuincyAdams", "born", "born", "date", "1767-07-11")
        self.fact("JohnQuincyAdams", "died", "died", "date", "1848-02-23")
        self.fact("JohnQuincyAdams", "marriedTo", "Married to", "entity", "LouisaAdams",
                  "1797-07-26", "1848-02-23")
        self.fact("JohnQuincyAdams", "positionHeld", "Position held", "entity", "PresidentOfUS",
                  "1825-03-04", "1829-03-04")
        self.fact("JohnQuincyAdams", "positionHeld", "Position held", "entity", "SecretaryState",
                  "1817-09-22", "1825-03-04")
        self.fact("JohnQuincyAdams", "educatedAt", "Educated at", "entity", "HarvardCollege",
                  "1785-03-15", "1787-07-18")
        self.fact("JohnQuincyAdams", "signatory", "Signatory", "entity", "TreatyOfGhent",
                  "1814-12-24", "1814-12-24")
        self.fact("JohnQuincyAdams", "memberOf", "Member of", "entity", "AmericanAcademy")
        self.fact("JohnQuincyAdams", "positionHeld", "Position held", "entity", "AmbassadorNL",
                  "1794-05-30", "1797-06-01")

        self.fact("CharlesAdams", "born", "born", "date", "1770-05-29")
        self.fact("CharlesAdams", "died", "died", "date", "1800-11-30")
        self.fact("CharlesAdams", "educatedAt", "Educated at", "entity", "HarvardCollege",
                  "1785-08-20", "1789-07-15")

        self.fact("LouisaAdams", "born", "born", "date", "1775-02-12")
        self.fact("LouisaAdams", "died", "died", "date", "1852-05-15")
        self.fact("LouisaAdams", "marriedTo", "Married to", "entity", "JohnQuincyAdams",
                  "1797-07-26", "1848-02-23")

        self.fact("SamuelAdams", "born", "born", "date", "1722-09-27")
        self.fact("SamuelAdams", "died", "died", "date", "1803-10-02")
        self.fact("SamuelAdams", "positionHeld", "Position held", "entity", "GovernorMass",
                  "1794-10-08", "1797-06-02")
        self.fact("SamuelAdams", "signatory", "Signatory", "entity", "DeclarationOfIndependence",
                  "1776-07-04", "1776-07-04")
        self.fact("SamuelAdams", "educatedAt", "Educated at", "entity", "HarvardCollege",
                  "1736-08-25", "1743-07-02")
        self.fact("SamuelAdams", "memberOf", "Member of", "entity", "ContinentalCongress")

        self.fact("ThomasJefferson", "born", "born", "date", "1743-04-13")
        self.fact("ThomasJefferson", "died", "died", "date", "1826-07-04")
        self.fact("ThomasJefferson", "marriedTo", "Married to", "entity", "MarthaJefferson",
                  "1772-01-01", "1782-09-06")
        self.fact("ThomasJefferson", "positionHeld", "Position held", "entity", "PresidentOfUS",
                  "1801-03-04", "1809-03-04")
        self.fact("ThomasJefferson", "positionHeld", "Position held", "entity",
                  "VicePresidentOfUS", "1797-03-04", "1801-03-04")
        self.fact("ThomasJefferson", "signatory", "Signatory", "entity",
                  "DeclarationOfIndependence", "1776-07-04", "1776-07-04")
        self.fact("ThomasJefferson", "educatedAt", "Educated at", "entity", "WilliamAndMary",
                  "1760-03-25", "1762-04-25")
        self.fact("ThomasJefferson", "residence", "Residence", "entity", "Monticello",
                  "1770-11-26", "1826-07-04")

        self.fact("MarthaJefferson", "born", "born", "date", "1748-10-30")
        self.fact("MarthaJefferson", "died", "died", "date", "1782-09-06")
        self.fact("MarthaJefferson", "marriedTo", "Married to", "entity", "ThomasJefferson",
                  "1772-01-01", "1782-09-06")

        self.fact("BenjaminFranklin", "born", "born", "date", "1706-01-17")
        self.fact("BenjaminFranklin", "died", "died", "date", "1790-04-17")
        self.fact("BenjaminFranklin", "memberOf", "Member of", "entity", "RoyalSociety")
        self.fact("BenjaminFranklin", "awardReceived", "Award received", "entity", "CopleyMedal",
                  "1753-11-30", "1753-11-30")
        self.fact("BenjaminFranklin", "signatory", "Signatory", "entity",
                  "DeclarationOfIndependence", "1776-07-04", "1776-07-04")
        self.fact("BenjaminFranklin", "signatory", "Signatory", "entity", "TreatyOfParis",
                  "1783-09-03", "1783-09-03")
        self.fact("BenjaminFranklin", "founded", "Founded", "entity", "PhilosophicalSociety")
        self.fact("BenjaminFranklin", "positionHeld", "Position held", "entity",
                  "AmbassadorFrance", "1778-03-23", "1785-05-17")
        self.fact("BenjaminFranklin", "awardReceived", "Award received", "entity",
                  "MagellanicPremium", "1786-12-01", "1786-12-01")
        self.fact("ThomasJefferson", "positionHeld", "Position held", "entity", "SecretaryState",
                  "1790-03-22", "1793-12-31")
        self.fact("ThomasJefferson", "memberOf", "Member of", "entity", "PhilosophicalSociety")
        self.fact("ThomasJefferson", "founded", "Founded", "entity", "UniversityOfVirginia")
        self.fact("SamuelAdams", "correspondedWith", "Corresponded with", "entity", "JohnAdams")
        self.fact("JohnAdams", "correspondedWith", "Corresponded with", "entity",
                  "ThomasJefferson")
        self.fact("JohnAdams", "correspondedWith", "Corresponded with", "entity", "JohnLocke")

        self.fact("JohnLocke", "born", "born", "date", "1632-08-29")
        self.fact("JohnLocke", "died", "died", "date", "1704-10-28")
        self.fact("JohnLocke", "memberOf", "Member of", "entity", "RoyalSociety")

        self.event("EvAdamsAmnesty", "Amnesty for the Fries Rebellion farmers",
                   "1800-05-21", "", "39.9526", "-75.1652", ["JohnAdams"],
                   "President John Adams issues general amnesty for the Pennsylvania Dutch "
                   "farmers who participated in Fries's Rebellion.")
        self.event("EvDeclarationSigning", "Signing of the Declaration of Independence",
                   "1776-08-02", "", "39.9489", "-75.1500",
                   ["JohnAdams", "ThomasJefferson", "BenjaminFranklin", "SamuelAdams"],
                   "Delegates put their names to the engrossed Declaration of Independence.")
        self.event("EvTreatyParisSigning", "Signing of the Treaty of Paris",
                   "1783-09-03", "", "48.8566", "2.3522",
                   ["JohnAdams", "BenjaminFranklin"],
                   "Commissioners sign the treaty ending the war of independence.")
        self.event("EvFirstCongress", "First Continental Congress",
                   "1774-09-05", "1774-10-26", "39.9489", "-75.1500",
                   ["JohnAdams", "SamuelAdams"],
                   "Delegates of twelve colonies meet at Carpenters' Hall.")
        self.event("EvSecondCongress", "Second Continental Congress",
                   "1775-05-10", "1781-03-01", "39.9489", "-75.1500",
                   ["JohnAdams", "SamuelAdams", "ThomasJefferson", "BenjaminFranklin"],
                   "The congress that managed the war effort and adopted independence.")
        self.event("EvAdamsWedding", "Wedding of John and Abigail Adams",
                   "1764-10-25", "", "42.2180", "-70.9395",
                   ["JohnAdams", "AbigailAdams"],
                   "John Adams marries Abigail Smith at the Weymouth parsonage.")
        self.event("EvAdamsInauguration", "Inauguration of President Adams",
                   "1797-03-04", "", "39.9489", "-75.1500",
                   ["JohnAdams", "ThomasJefferson"],
                   "John Adams takes the presidential oath in Philadelphia.")
        self.event("EvJeffersonVPOath", "Vice-presidential oath of Thomas Jefferson",
                   "1797-03-04", "", "39.9489", "-75.1500",
                   ["ThomasJefferson", "JohnAdams"],
                   "Thomas Jefferson is sworn in as vice president on the same day.")
        self.event("EvJeffersonInauguration", "Inauguration of President Jefferson",
                   "1801-03-04", "", "38.8977", "-77.0365", ["ThomasJefferson"],
                   "Thomas Jefferson takes the oath in the new capital.")
        self.event("EvQuincyInauguration", "Inauguration of President John Quincy Adams",
                   "1825-03-04", "", "38.8977", "-77.0365", ["JohnQuincyAdams"],
                   "John Quincy Adams is sworn in as the sixth president.")
        self.event("EvBostonTeaParty", "Boston Tea Party",
                   "1773-12-16", "", "42.3601", "-71.0589", ["SamuelAdams"],
                   "Crates of East India Company tea are dumped into Boston harbor.")
        self.event("EvKiteExperiment", "Kite experiment",
                   "1752-06-15", "", "39.9526", "-75.1652", ["BenjaminFranklin"],
                   "Benjamin Franklin draws electric fire from a thunderstorm with a kite.")
        self.event("EvConstitutionalConvention", "Constitutional Convention",
                   "1787-05-25", "1787-09-17", "39.9489", "-75.1500", ["BenjaminFranklin"],
                   "Delegates draft a new frame of government in Philadelphia.")

        # corpus files for the founders are written by hand so the unit
        # tests can pin exact sentences
        wiki = [
            ("JohnAdams", [
                "John Adams was born on October 30, 1735, in Braintree.",
                "He married Abigail Smith in 1764.",
                "Their son John Quincy Adams was born in 1767.",
                "Their son Charles Adams was born in 1770.",
                "He signed the Declaration of Independence in 1776.",
                "He drafted and signed the Constitution of Massachusetts in 1780.",
                "He served as Vice President of the United States from 1789 to 1797.",
                "He served as President of the United States from 1797 to 1801.",
                "He died on July 4, 1826, at Quincy.",
                NOISE[0],
            ]),
            ("AbigailAdams", [
                "Abigail Adams was born on November 22, 1744, at Weymouth.",
                "She married John Adams in 1764.",
                "Her son John Quincy Adams was born in 1767.",
                "Her son Charles Adams was born in 1770.",
                "She died on October 28, 1818.",
                NOISE[1],
            ]),
            ("JohnQuincyAdams", [
                "John Quincy Adams was born on July 11, 1767.",
                "He married Louisa Johnson in 1797.",
                "He served as Secretary of State from 1817 to 1825.",
                "He served as President of the United States from 1825 to 1829.",
                "He died on February 23, 1848, in the Capitol.",
                NOISE[2],
            ]),
            ("CharlesAdams", [
                "Charles Adams was born on May 29, 1770.",
                "He died on November 30, 1800, in New York.",
                NOISE[3],
            ]),
            ("LouisaAdams", [
                "Louisa Adams was born on February 12, 1775, in London.",
                "She married John Quincy Adams in 1797.",
                "She died on May 15, 1852.",
                NOISE[4],
            ]),
            ("SamuelAdams", [
                "Samuel Adams was born on September 27, 1722, in Boston.",
                "He signed the Declaration of Independence in 1776.",
                "He served as Governor of Massachusetts from 1794 to 1797.",
                "He died on October 2, 1803.",
                NOISE[0],
            ]),
            ("ThomasJefferson", [
                "Thomas Jefferson was born on April 13, 1743, in the Virginia piedmont.",
                "He married Martha Wayles in 1772.",
                "He signed the Declaration of Independence in 1776.",
                "He served as Vice President of the United States from 1797 to 1801.",
                "He served as President of the United States from 1801 to 1809.",
                "He died on July 4, 1826, at Monticello.",
                NOISE[1],
            ]),
            ("MarthaJefferson", [
                "Martha Jefferson was born on October 30, 1748.",
                "She married Thomas Jefferson in 1772.",
                "She died on September 6, 1782.",
                NOISE[2],
            ]),
            ("BenjaminFranklin", [
                "Benjamin Franklin was born on January 17, 1706, in Boston.",
                "He signed the Declaration of Independence in 1776.",
                "He signed the Treaty of Paris in 1783.",
                "He died on April 17, 1790, in Philadelphia.",
                NOISE[3],
            ]),
            ("JohnLocke", [
                "John Locke was born on August 29, 1632, in Somerset.",
                "He died on October 28, 1704.",
                NOISE[4],
            ]),
        ]
        bio_web = [
            ("JohnAdams", [
                "John Adams was born in 1735 to a farming family.",
                "In 1764 he married Abigail Smith of Weymouth.",
                "He studied law after entering Harvard College in 1751.",
                "He was elected to the American Academy of Arts and Sciences in 1780.",
                "From 1788 he kept his residence at Peacefield farm.",
                "A statue of John Quincy Adams was unveiled nearby in 1900.",
                NOISE[2],
            ]),
            ("AbigailAdams", [
                "Abigail Adams was born in 1744.",
                "In 1764 she married John Adams.",
                "From 1788 she managed the household at Peacefield.",
                NOISE[3],
            ]),
            ("JohnQuincyAdams", [
                "John Quincy Adams was born in 1767, the eldest son of a diplomat.",
                "He entered Harvard College in 1785.",
                "In 1797 he married Louisa Johnson in London.",
                NOISE[4],
            ]),
            ("CharlesAdams", [
                "Charles Adams was born in 1770.",
                "He entered Harvard College in 1785.",
                NOISE[0],
            ]),
            ("LouisaAdams", [
                "Louisa Adams was born in 1775.",
                "In 1797 she married John Quincy Adams.",
                NOISE[1],
            ]),
            ("SamuelAdams", [
                "Samuel Adams was born in 1722.",
                "He entered Harvard College in 1736.",
                "He sat in the Continental Congress from 1774.",
                NOISE[2],
            ]),
            ("ThomasJefferson", [
                "Thomas Jefferson was born in 1743.",
                "In 1772 he married Martha Wayles.",
                "He enrolled at the College of William and Mary in 1760.",
                "From 1770 he built and rebuilt his residence at Monticello.",
                NOISE[3],
            ]),
            ("MarthaJefferson", [
                "Martha Jefferson was born in 1748.",
                "In 1772 she married Thomas Jefferson.",
                NOISE[4],
            ]),
            ("BenjaminFranklin", [
                "Benjamin Franklin was born in 1706.",
                "The Royal Society elected him a fellow, and he won the Copley Medal in 1753.",
                "He remained a member of the Royal Society from 1756 until his death.",
                NOISE[0],
            ]),
            ("JohnLocke", [
                "John Locke was born in 1632.",
                "The Royal Society admitted him as a fellow in 1668.",
                NOISE[1],
            ]),
        ]
        for person, lines in wiki:
            for line in lines:
                self.sentence(person, "wikipedia", line)
        for person, lines in bio_web:
            for line in lines:
                self.sentence(person, "bio_web", line)

    # ---- synthetic families --------------------------------------------

    def build_synthetic(self):
        rng = self.rng
        surnames = rng.sample(SURNAMES, 18)
        male = list(MALE_NAMES)
        female = list(FEMALE_NAMES)
        rng.shuffle(male)
        rng.shuffle(female)

        couples = []
        for i in range(14):
            surname = surnames[i]
            husband = self._synth_person(male.pop(), surname, rng.randrange(1700, 1795))
            maiden = surnames[14 + i % 4]
            wife = self._synth_person(
                female.pop(), surname, husband["birth_year"] + rng.randrange(-5, 9),
                maiden=maiden,
            )
            couples.append((husband, wife))

        children = []
        for husband, wife in couples[:8]:
            wed_year = max(husband["birth_year"], wife["birth_year"]) + rng.randrange(22, 29)
            child_birth = wed_year + rng.randrange(1, 9)
            child = self._synth_person(
                (male if rng.random() < 0.5 else female).pop(), husband["surname"], child_birth,
                birth_exact=True,
            )
            children.append((husband, wife, child))

        singles = [self._synth_person(male.pop(), surnames[rng.randrange(14, 18)],
                                      rng.randrange(1710, 1800)) for _ in range(1)]

        # persons with unusual temporal shapes, for open/missing-bound paths
        eleanor = self._named_person("EleanorVance", "Eleanor Vance", "1931-05-10", "",
                                     tags="politician|writer", links=35,
                                     desc="Editor and long-serving commissioner, still writing.")
        obadiah = self._named_person("ObadiahCrane", "Obadiah Crane", "", "1799-03-03",
                                     tags="clergyman", links=8,
                                     desc="Preacher whose birth records were lost to fire.")
        silas = self._named_person("SilasHartwell", "Silas Hartwell", "", "",
                                   tags="merchant", links=6,
                                   desc="Trader known only from scattered ledgers.")

        for husband, wife in couples:
            self._marriage(husband, wife)
        for husband, wife, child in children:
            self._child_fact(husband, child)
            self._child_fact(wife, child)
        synth = [c[0] for c in couples] + [c[1] for c in couples] + \
            [c[2] for c in children] + singles
        for person in synth:
            self._career_facts(person, peers=synth)

        self.fact("EleanorVance", "born", "born", "date", "1931-05-10")
        self.fact("EleanorVance", "positionHeld", "Position held", "entity", "SenatorUS",
                  "1985-01-15", "")
        self.fact("EleanorVance", "memberOf", "Member of", "entity", "AmericanAcademy")
        self.sentence("EleanorVance", "wikipedia", "Eleanor Vance was born on May 10, 1931.")
        self.sentence("EleanorVance", "wikipedia",
                      "She has served as United States Senator since 1985.")
        self.sentence("EleanorVance", "wikipedia", NOISE[0])
        self.sentence("EleanorVance", "bio_web", "Eleanor Vance was born in 1931.")
        self.sentence("EleanorVance", "bio_web",
                      "The American Academy of Arts and Sciences elected her in 1992.")
        self.sentence("EleanorVance", "bio_web", NOISE[1])

        self.fact("ObadiahCrane", "died", "died", "date", "1799-03-03")
        self.fact("ObadiahCrane", "residence", "Residence", "entity", ESTATES[0],
                  "1770-06-01", "1799-03-03")
        self.fact("ObadiahCrane", "memberOf", "Member of", "entity", "PhilosophicalSociety")
        self.sentence("ObadiahCrane", "wikipedia", "Obadiah Crane died on March 3, 1799.")
        self.sentence("ObadiahCrane", "wikipedia", NOISE[2])
        self.sentence("ObadiahCrane", "bio_web",
                      "From 1770 Obadiah Crane kept his residence at Oakhill Manor.")
        self.sentence("ObadiahCrane", "bio_web", NOISE[3])

        self.fact("SilasHartwell", "positionHeld", "Position held", "entity", "JudgeSuffolk",
                  "1750-01-01", "1760-06-30")
        self.fact("SilasHartwell", "memberOf", "Member of", "entity", "RoyalSociety")
        self.sentence("SilasHartwell", "wikipedia",
                      "Silas Hartwell served as Justice of the Suffolk Court from 1750 to 1760.")
        self.sentence("SilasHartwell", "wikipedia", NOISE[4])
        self.sentence("SilasHartwell", "bio_web",
                      "Ledgers place Silas Hartwell in the Royal Society's rooms around 1755.")
        self.sentence("SilasHartwell", "bio_web", NOISE[0])

    def _named_person(self, id, label, birth, death, tags, links, desc):
        self.entity(id, label, "person", tags, birth, death, links=links, desc=desc)
        return dict(id=id, label=label, display=label.split("|")[0])

    def _synth_person(self, first, surname, birth_year, maiden=None, birth_exact=False):
        display = f"{first} {surname}"
        label = display if maiden is None else f"{display}|{first} {maiden}"
        id = f"{first}{surname}"
        birth = self.rand_date(birth_year)
        death_year = birth_year + self.rng.randrange(55, 81)
        death = self.rand_date(death_year)
        tags = "|".join(sorted(self.rng.sample(TAG_POOL, self.rng.randrange(1, 3))))
        desc = f"{display} of the {surname} family, remembered as a {tags.split('|')[0]}."
        self.entity(id, label, "person", tags, birth, death,
                    links=self.rng.randrange(5, 80), desc=desc)
        person = dict(
            id=id, display=display, first=first, surname=surname,
            birth=birth, death=death, birth_year=birth_year, death_year=death_year,
            maiden=f"{first} {maiden}" if maiden else None,
        )
        self.fact(id, "born", "born", "date", birth)
        self.fact(id, "died", "died", "date", death)
        self._mention(person, "born", None, birth_year,
                      wiki=f"{display} was born on {prose_date(birth)}.",
                      web=f"{display} was born in {birth_year}.")
        self._mention(person, "died", None, death_year,
                      wiki=f"{display.split(' ')[0]} died on {prose_date(death)}.",
                      web=None)
        return person

    def _mention(self, person, prop, obj_label, year, wiki=None, web=None):
        """Emit corpus sentences per source emphasis, with seeded dropout."""
        if wiki and prop in WIKI_PROPS and (person["id"] == "JohnAdams" or self.rng.random() < 0.85):
            self.sentence(person["id"], "wikipedia", wiki)
        if web and prop in BIOWEB_PROPS and (person["id"] == "JohnAdams" or self.rng.random() < 0.85):
            self.sentence(person["id"], "bio_web", web)

    def _marriage(self, husband, wife):
        rng = self.rng
        wed_year = max(husband["birth_year"], wife["birth_year"]) + rng.randrange(22, 29)
        wed = self.rand_date(wed_year)
        end = min(husband["death"], wife["death"])
        asserted = rng.random() < 0.5
        for subject, other in ((husband, wife), (wife, husband)):
            if asserted:
                self.fact(subject["id"], "marriedTo", "Married to", "entity", other["id"], wed, end)
            else:
                self.fact(subject["id"], "marriedTo", "Married to", "entity", other["id"])
            spouse_name = other["display"]
            if other is wife and wife["maiden"] and rng.random() < 0.3:
                spouse_name = wife["maiden"]
            self._mention(subject, "marriedTo", spouse_name, wed_year,
                          wiki=f"{subject['display'].split(' ')[0]} married {spouse_name} in {wed_year}.",
                          web=f"In {wed_year} came the marriage to {spouse_name}.")
        if rng.random() < 0.9:
            eid = f"EvWedding{husband['surname']}{wed_year}"
            located = rng.random() < 0.6
            self.event(
                eid, f"Wedding of {husband['display']} and {wife['display']}", wed, "",
                f"{rng.uniform(38.0, 44.0):.4f}" if located else "",
                f"{rng.uniform(-77.0, -70.0):.4f}" if located else "",
                [husband["id"], wife["id"]],
                f"{husband['display']} and {wife['display']} marry before their congregation.",
            )

    def _child_fact(self, parent, child):
        self.fact(parent["id"], "child", "Child", "entity", child["id"])
        self._mention(parent, "child", child["display"], child["birth_year"],
                      wiki=f"The child {child['display']} was born in {child['birth_year']}.",
                      web=None)

    def _career_facts(self, person, peers):
        rng = self.rng
        birth_year, death_year = person["birth_year"], person["death_year"]
        if rng.random() < 0.95:
            college = rng.choice(COLLEGES)
            start = birth_year + rng.randrange(14, 17)
            end = start + rng.randrange(3, 5)
            self.fact(person["id"], "educatedAt", "Educated at", "entity", college,
                      self.rand_date(start), self.rand_date(end))
            label = self._label_of(college)
            self._mention(person, "educatedAt", label, start,
                          wiki=None, web=f"Schooling began at {label} in {start}.")
        offices = rng.sample(OFFICES, rng.choices([0, 1, 2], weights=[1, 5, 4])[0])
        term_start = birth_year + rng.randrange(28, 34)
        for office in offices:
            start = term_start
            end = min(start + rng.randrange(3, 9), death_year - 1)
            if end <= start:
                break
            self.fact(person["id"], "positionHeld", "Position held", "entity", office,
                      self.rand_date(start), self.rand_date(end))
            label = self._label_of(office)
            self._mention(person, "positionHeld", label, start,
                          wiki=f"From {start} to {end} the office of {label} followed.",
                          web=None)
            term_start = end + rng.randrange(1, 4)
        for society in rng.sample(SOCIETIES, rng.choices([0, 1, 2], weights=[2, 5, 3])[0]):
            self.fact(person["id"], "memberOf", "Member of", "entity", society)
            label = self._label_of(society)
            year = max(birth_year + 30, self._founding_year(society))
            if year <= death_year:
                self._mention(person, "memberOf", label, year,
                              wiki=None, web=f"The {label} admitted a new member in {year}.")
        if rng.random() < 0.7:
            award = rng.choice(["CopleyMedal", "MagellanicPremium"])
            year = birth_year + rng.randrange(35, 51)
            when = self.rand_date(year)
            self.fact(person["id"], "awardReceived", "Award received", "entity", award, when, when)
            label = self._label_of(award)
            self._mention(person, "awardReceived", label, year,
                          wiki=None, web=f"The {label} arrived in {year}.")
            if rng.random() < 0.7:
                located = rng.random() < 0.5
                self.event(f"EvAward{person['id']}", f"Presentation of the {label}",
                           when, "",
                           f"{rng.uniform(38.0, 52.0):.4f}" if located else "",
                           f"{rng.uniform(-77.0, 2.0):.4f}" if located else "",
                           [person["id"]],
                           f"{person['display']} is presented with the {label}.")
        if rng.random() < 0.7:
            estate = rng.choice(ESTATES)
            start = birth_year + rng.randrange(35, 45)
            self.fact(person["id"], "residence", "Residence", "entity", estate,
                      self.rand_date(start), person["death"])
            label = self._label_of(estate)
            self._mention(person, "residence", label, start,
                          wiki=None, web=f"From {start} the family residence was {label}.")
        if rng.random() < 0.35:
            self.fact(person["id"], "influencedBy", "Influenced by", "entity", "JohnLocke")
        for peer in rng.sample(peers, min(len(peers), rng.choices([0, 1, 2, 3], weights=[1, 4, 3, 2])[0])):
            if peer["id"] != person["id"]:
                self.fact(person["id"], "correspondedWith", "Corresponded with", "entity",
                          peer["id"])
        if rng.random() < 0.55:
            eid = f"EvJourney{person['id']}"
            year = birth_year + rng.randrange(25, 40)
            start = self.rand_date(year)
            self.event(eid, f"Grand tour of {person['display']}", start, "",
                       f"{self.rng.uniform(40.0, 52.0):.4f}", f"{self.rng.uniform(-5.0, 12.0):.4f}",
                       [person["id"]],
                       f"{person['display']} sets out on a long continental journey.")
            if rng.random() < 0.8:
                self.fact(person["id"], "participatedIn", "Participated in", "entity", eid)
        if rng.random() < 0.25:
            # out-of-window trap: the object is mentioned with a much later year
            objects = [f for f in self.facts
                       if f[0] == person["id"] and f[3] == "entity" and f[1] != "influencedBy"]
            if objects:
                target = rng.choice(objects)
                label = self._label_of(target[4])
                year = death_year + rng.randrange(60, 120)
                self.sentence(person["id"], "bio_web",
                              f"A monument honoring {label} was unveiled in {year}.")

    def _label_of(self, id):
        for row in self.entities:
            if row["id"] == id:
                return row["label"].split("|")[0]
        for row in self.events:
            if row["id"] == id:
                return row["label"]
        raise KeyError(id)

    def _founding_year(self, id):
        for row in self.entities:
            if row["id"] == id:
                return int(row["birth"].split("-")[0])
        raise KeyError(id)

    # ---- noise + output -------------------------------------------------

    def finish_bios(self):
        persons = [row["id"] for row in self.entities if row["kind"] == "person"]
        for person in persons:
            for source in ("wikipedia", "bio_web"):
                lines = self.bios.setdefault((person, source), [])
                lines.append(self.rng.choice(NOISE))

    def write(self, out: Path):
        kg_dir = out / "mini_ekg"
        kg_dir.mkdir(parents=True, exist_ok=True)
        with open(kg_dir / "entities.tsv", "w", encoding="utf-8") as fh:
            fh.write("id\tlabel\tkind\ttype_tags\tbirth_or_start\tdeath_or_end\tlat\tlon\tlink_count\tdescription\n")
            for row in self.entities:
                fh.write("\t".join([
                    row["id"], row["label"], row["kind"], row["tags"], row["birth"],
                    row["death"], str(row["lat"]), str(row["lon"]), str(row["links"]),
                    row["desc"],
                ]) + "\n")
        with open(kg_dir / "events.tsv", "w", encoding="utf-8") as fh:
            fh.write("id\tlabel\tstart\tend\tlat\tlon\tparticipants\tdescription\n")
            for row in self.events:
                fh.write("\t".join([
                    row["id"], row["label"], row["start"], row["end"], str(row["lat"]),
                    str(row["lon"]), row["participants"], row["desc"],
                ]) + "\n")
        with open(kg_dir / "facts.tsv", "w", encoding="utf-8") as fh:
            fh.write("subject\tproperty\tproperty_label\tobject_kind\tobject\tvalidity_start\tvalidity_end\n")
            for fact in self.facts:
                fh.write("\t".join(fact) + "\n")
        for (person, source), lines in sorted(self.bios.items()):
            doc_dir = out / "corpus" / source
            doc_dir.mkdir(parents=True, exist_ok=True)
            (doc_dir / f"{person}.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")


def verify(out: Path):
    """Replay the pipeline and assert the properties the tests pin."""
    from biotimelines import (
        Hyperparams, build_benchmark, build_schema, build_timeline, extract_relations,
        featurize, load_kg, person_events, predict, score, train,
    )

    kg = load_kg(out / "mini_ekg")
    assert kg.n_persons == 50, f"want 50 persons, got {kg.n_persons}"
    assert 450 <= len(kg.facts) <= 560, len(kg.facts)
    assert 55 <= len(kg.events) <= 70, len(kg.events)

    relations = extract_relations(kg, "JohnAdams")
    spans = {
        (r.property_id, r.object_key): (
            r.validity.start.iso() if r.validity.start else None,
            r.validity.end.iso() if r.validity.end else None,
        )
        for r in relations
    }
    assert spans[("born", "1735-10-30")] == ("1735-10-30", "1735-10-30")
    assert spans[("marriedTo", "AbigailAdams")] == ("1764-10-25", "1818-10-28")
    assert spans[("child", "JohnQuincyAdams")] == ("1767-07-11", "1826-07-04")
    assert ("influencedBy", "JohnLocke") not in spans, "empty intersection must drop"

    result = build_benchmark(kg, out / "corpus")
    for source in ("wikipedia", "bio_web"):
        total = sum(1 for r in result.records if r.source == source)
        positives = result.summary["positives"][source]
        assert 0 < positives < total, (source, positives, total)

    schema = build_schema(result.records, kg)
    models = {
        source: train(
            [r for r in result.records if r.source == source], schema, kg, Hyperparams()
        )
        for source in ("wikipedia", "bio_web")
    }

    president = next(
        r for r in relations if r.property_id == "positionHeld" and r.object_key == "PresidentOfUS"
    )
    assert score(models["wikipedia"], featurize(president, kg, schema)) > 0

    disagree = [
        r for r in relations
        if predict(models["wikipedia"], featurize(r, kg, schema))
        != predict(models["bio_web"], featurize(r, kg, schema))
    ]
    assert disagree, "the two models must disagree on at least one John Adams relation"

    timeline = build_timeline(kg, "JohnAdams", models["wikipedia"], schema)
    entry_props = [e.relation.property_id for e in timeline.entries]
    for needed in ("born", "marriedTo", "child", "positionHeld"):
        assert needed in entry_props, (needed, entry_props)
    assert timeline.rejected, "some relation must be rejected"
    groups = {e.group_label for e in timeline.entries}
    assert "Position held" in groups and "Misc." in groups, groups

    events = person_events(kg, "JohnAdams")
    assert any(ev.id == "EvAdamsAmnesty" for ev in events)

    print(f"fixture ok: {kg.n_persons} persons, {len(kg.entities)} entities, "
          f"{len(kg.events)} events, {len(kg.facts)} facts, "
          f"{result.summary['relations']} benchmark records "
          f"(positives {result.summary['positives']}), "
          f"{len(disagree)} model disagreement(s) for JohnAdams")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="fixtures", type=Path)
    parser.add_argument("--skip-verify", action="store_true")
    args = parser.parse_args()

    fixture = Fixture()
    fixture.build_core()
    fixture.build_synthetic()
    fixture.finish_bios()
    fixture.write(args.out)
    if not args.skip_verify:
        verify(args.out)


if __name__ == "__main__":
    main()
