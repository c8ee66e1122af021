/** Wire types of the voganpress HTTP API. */

export type Parity = "even" | "odd";
export type Color = "white" | "grey" | "black";

export interface DiagramNode {
  id: number;
  parity: Parity;
  color: Color;
  a: number;
}

export interface DiagramEdge {
  u: number;
  v: number;
  mult: number;
  longer: number | null;
}

export interface Diagram {
  family: string;
  params: Record<string, number | string>;
  nodes: DiagramNode[];
  edges: DiagramEdge[];
  lowest: number;
}

/** Circlings travel as sorted ascending id lists. */
export type Circling = number[];

export interface DiagramRef {
  family: string;
  params: Record<string, number | string>;
}

export interface PressResponse {
  circling: { circled: Circling };
  admissible: boolean;
  pressable: number[];
}

export interface ReduceResponse {
  circling: { circled: Circling };
  steps: number[];
}

export interface RelatedResponse {
  related: boolean;
  steps?: number[];
}

export interface SymmetryJson {
  perm: number[];
  fixes_lowest: boolean;
}

export interface EquivalentResponse {
  equivalent: boolean;
  symmetry?: SymmetryJson;
  steps?: number[];
}

export interface FamilyTemplate {
  family: string;
  params: string[];
  constraints: string;
  parity_rule: string;
}

export interface ApiErrorBody {
  code: string;
  message: string;
}
