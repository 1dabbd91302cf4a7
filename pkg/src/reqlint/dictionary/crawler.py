"""MediaWiki category crawler for building domain corpora.

Walks a category tree breadth-first, takes each category's longest
pages, and stores their plain-text extracts under a per-domain cache
directory.  Cached pages are never re-fetched, so an interrupted crawl
resumes where it stopped.
"""

import time
import warnings
from pathlib import Path

import requests

from ..errors import CategoryNotFound, CrawlError

BATCH = 50  # pageids per info request, the API maximum for anonymous use
USER_AGENT = "reqlint-corpus-crawler/0.1"


class WikiCrawler:

    def __init__(self, api_url: str, session=None, rate_limit: float = 0.1,
                 timeout: float = 30.0):
        self.api_url = api_url
        self.session = session or requests.Session()
        self.session.headers.setdefault("User-Agent", USER_AGENT)
        self.rate_limit = rate_limit
        self.timeout = timeout
        self._last_request = 0.0

    def _get(self, **params) -> dict:
        wait = self.rate_limit - (time.monotonic() - self._last_request)
        if wait > 0:
            time.sleep(wait)
        params.update(format="json")
        try:
            response = self.session.get(self.api_url, params=params,
                                        timeout=self.timeout)
        except requests.RequestException as err:
            raise CrawlError(f"request failed: {err}") from err
        finally:
            self._last_request = time.monotonic()
        if response.status_code != 200:
            raise CrawlError(
                f"API returned HTTP {response.status_code}")
        try:
            payload = response.json()
        except ValueError as err:
            raise CrawlError("API returned invalid JSON") from err
        if "error" in payload:
            raise CrawlError(f"API error: {payload['error']}")
        return payload

    def category_members(self, category: str) -> list:
        """All members (pages and subcategories) of one category."""
        members = []
        continuation = {}
        while True:
            payload = self._get(action="query", list="categorymembers",
                                cmtitle=category, cmlimit="500",
                                cmtype="page|subcat",
                                cmprop="ids|title|type", **continuation)
            members.extend(payload.get("query", {})
                           .get("categorymembers", []))
            continuation = payload.get("continue")
            if not continuation:
                return members

    def _page_lengths(self, pageids) -> dict:
        lengths = {}
        ids = list(pageids)
        for start in range(0, len(ids), BATCH):
            chunk = ids[start:start + BATCH]
            payload = self._get(action="query", prop="info",
                                pageids="|".join(str(i) for i in chunk))
            for key, page in payload.get("query", {}).get("pages",
                                                          {}).items():
                if "length" in page:
                    lengths[int(key)] = page["length"]
        return lengths

    def _page_text(self, pageid: int) -> str:
        payload = self._get(action="query", prop="extracts",
                            explaintext="1", pageids=str(pageid))
        pages = payload.get("query", {}).get("pages", {})
        page = pages.get(str(pageid), {})
        return page.get("extract", "")

    def crawl_domain(self, category: str, out_dir, sub_cats: int = 500,
                     pages: int = 20) -> list:
        """Fetch the top pages of a category tree into ``out_dir``.

        ``sub_cats`` bounds how many categories (the root included) are
        expanded; ``pages`` is the number of longest pages kept per
        category.  Returns the paths of all documents in the cache,
        fetched and pre-existing alike.
        """
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)

        queue = [category]
        seen_categories = {category}
        chosen: dict[int, str] = {}
        expanded = 0
        root_members = None
        while queue and expanded < sub_cats:
            current = queue.pop(0)
            members = self.category_members(current)
            expanded += 1
            if root_members is None:
                root_members = members
                if not members:
                    raise CategoryNotFound(category)
            page_members = [m for m in members if m.get("type") == "page"]
            for member in members:
                if (member.get("type") == "subcat"
                        and member["title"] not in seen_categories):
                    seen_categories.add(member["title"])
                    queue.append(member["title"])
            if not page_members:
                continue
            lengths = self._page_lengths(m["pageid"] for m in page_members)
            ranked = sorted(
                page_members,
                key=lambda m: (-lengths.get(m["pageid"], 0), m["pageid"]))
            for member in ranked[:pages]:
                chosen.setdefault(member["pageid"], member["title"])

        if not chosen:
            raise CrawlError(
                f"category tree {category!r} contains no pages")

        failures = 0
        for pageid in sorted(chosen):
            target = out_dir / f"{pageid}.txt"
            if target.exists():
                continue
            try:
                text = self._page_text(pageid)
            except CrawlError as err:
                failures += 1
                warnings.warn(f"page {pageid} skipped: {err}")
                continue
            if text.strip():
                target.write_text(text, encoding="utf-8")
        if failures:
            warnings.warn(
                f"{failures} of {len(chosen)} pages could not be fetched; "
                "the corpus is partial")

        documents = sorted(out_dir.glob("*.txt"))
        if not documents:
            raise CrawlError(
                f"no documents could be fetched for {category!r}")
        return documents
