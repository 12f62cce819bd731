/** Golden service responses for the 5x2 labyrinth session, captured from
 * the HTTP API: goal1 = Pos(0, 1) (inhabited), goal2 = Pos(2, 0)
 * (unproductive cycle), goal3 = Pos(4, 1) (no usable combinator). */

import type {
  HypergraphDoc,
  ReportDoc,
  RepositoryDoc,
  ResultDoc,
} from "../src/api.js";
import raw from "./fixtures.json" with { type: "json" };

interface RequestFixture {
  result: ResultDoc;
  reports: ReportDoc;
  steps: HypergraphDoc[];
  terms: { terms: string[] };
}

export const goal1 = raw.goal1 as unknown as RequestFixture;
export const goal2 = raw.goal2 as unknown as RequestFixture;
export const goal3 = raw.goal3 as unknown as RequestFixture;
export const repository = raw.repository as unknown as RepositoryDoc;
