package org.demo.kitchen;

public class Ingredient {
    private Pantry pantry;
    private Spice spice;
    private Recipe recipe;
    private Chef chef;
    private Oven oven;

    public Ingredient(Pantry pantry, Spice spice) {
        this.pantry = pantry;
        this.spice = spice;
    }

    public int gramWeight() {
        return 250;
    }

    public int freshnessDays() {
        return 3;
    }

    public Pantry pantry() {
        return pantry;
    }
}
